public class DataflowAnomaly {
    public int step(int n) {
        int a = n;
        a = a - 1;
        return a;
    }
}
