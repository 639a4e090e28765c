public class Reactor {
    private int cells;

    public int energy() {
        return cells * 2;
    }

    public void charge(int n) {
        this.cells = n;
    }
}
