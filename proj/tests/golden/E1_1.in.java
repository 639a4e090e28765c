public class NestedArray {
    private int[] arr = new int[4];

    public int[] getArr() {
        return arr;
    }

    public int first() {
        return getArr()[0];
    }
}
