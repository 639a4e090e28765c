public class NestedArray {
    private int[] arr = new int[10];

    public int[] getArr() {
        return arr;
    }

    public class Inner {
        private int[] arr2 = new int[5];

        public int[] getArr() {
            return arr2;
        }
    }
}
