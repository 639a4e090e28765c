public class Report {
    private StringBuilder out = new StringBuilder();

    public void line(String key, int value) {
        String text = key + "=" + value;
        out.append(text);
        out.append("\n");
    }
}
