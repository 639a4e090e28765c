public class Ticker {
    private int ticks;

    void tick() {
        ticks--;
    }
}
