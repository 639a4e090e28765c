public class Names {
    private static final String DEFAULT = "guest";

    public boolean isDefault(String user) {
        return user == DEFAULT;
    }

    public boolean differs(String a, String b) {
        return a != b;
    }

    public boolean sameLength(String a, String b) {
        return a.length() == b.length();
    }
}
