public class Loop {
    int sum(int n) {
        int s = 0;
        for (int j = 0; j < n; ++j) {
            s += j;
        }
        return s;
    }
}
