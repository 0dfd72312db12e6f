public class Temperature3 {
    static final int LIMIT = 91;

    public static void main(String[] args) {
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
    }
}
