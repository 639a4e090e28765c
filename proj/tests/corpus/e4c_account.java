public class Account {
    private int balance;
    private String owner;

    public Account(String owner) {
        this.owner = owner;
        balance = 0;
    }

    public void deposit(int amount) {
        balance = balance + amount;
    }

    public boolean ownedBy(String name) {
        return owner == name;
    }

    public static Account empty() {
        return new Account("none");
    }
}
