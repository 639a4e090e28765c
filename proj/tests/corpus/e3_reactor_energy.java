public class Reactor {
    private int[] cells;

    public Reactor(int[] seed) {
        cells = energy(seed);
    }

    public int[] energy(int[] seed) {
        int[] copy = new int[seed.length];
        for (int i = 0; i < seed.length; i++) {
            copy[i] = seed[i] * 2;
        }
        return copy;
    }
}
