public class Threshold {
    boolean high(int a) {
        return a > (3 + 5);
    }
}
