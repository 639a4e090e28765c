public class Counter {
    private int hits;

    public int count(int n) {
        int total = 0;
        for (int j = 0; j < n; j++) {
            total++;
        }
        hits++;
        --total;
        return total;
    }
}
