public class ArrayLength {
    public boolean sameLength(int[] a1, int[] a2) {
        return a1.length == a2.length;
    }
}
