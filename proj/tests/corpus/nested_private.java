public class NestedPrivate {
    public void bar() {
        doSomething();
    }

    private void doSomething() {
    }

    public void foo() {
        InnerClass inner = new InnerClass();
        inner.doWork();
    }

    class InnerClass {
        private void doWork() {
        }
    }
}
