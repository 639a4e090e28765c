public class Parser {
    public static boolean isDigit(char c) {
        return c >= '0' && c <= '9';
    }

    public int digits(String s) {
        int n = 0;
        for (int i = 0; i < s.length(); i++) {
            if (isDigit(s.charAt(i))) {
                n++;
            }
        }
        return n;
    }

    public static int countDigits(String s) {
        return new Parser().digits(s);
    }
}
