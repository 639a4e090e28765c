public class Traffic {
    enum Light {
        RED, GREEN;

        public Light next() {
            if (this == RED) {
                return GREEN;
            }
            return RED;
        }
    }

    interface Listener {
        void changed(Light light);

        default boolean enabled() {
            return true;
        }
    }

    private Light light = Light.RED;

    public boolean isRed() {
        return light == Light.RED;
    }

    public void publish(Listener l) {
        if (l.enabled()) {
            l.changed(light);
        }
    }
}
