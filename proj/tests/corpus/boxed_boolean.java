public class BoxedBoolean {
    public String describe(Boolean b) {
        String result = "unknown";
        if (b == Boolean.TRUE) {
            result = "yes";
        } else if (b == Boolean.FALSE) {
            result = "no";
        }
        return result;
    }
}
