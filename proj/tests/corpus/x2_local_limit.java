public class Limits {
    public int clampAll(int[] xs) {
        final int max = 64;
        int count = 0;
        for (int i = 0; i < xs.length; i++) {
            if (xs[i] > max) {
                xs[i] = max;
                count++;
            }
        }
        return count;
    }
}
