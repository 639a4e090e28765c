public class Flow {
    public int sum(int[] xs) {
        int s = 0;
        for (int i = 0; i < xs.length; i++) {
            s = s + xs[i];
        }
        return s;
    }

    public int overwrite() {
        int v = 1;
        v = 2;
        return v;
    }

    public int guarded(String text) {
        int parsed = -1;
        try {
            parsed = Integer.parseInt(text);
        } catch (NumberFormatException e) {
            parsed = 0;
        }
        return parsed;
    }
}
