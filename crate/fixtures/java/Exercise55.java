/**
 * Exercise55 program.
 */
public class Exercise55 {
    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static int safeParse(String input) {
        try {
            return Integer.parseInt(input.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static void main(String[] args) {
        System.out.println("GCD: " + greatestDivisor(27, 17));
        int parsed = safeParse(" 7 ");
        System.out.println(parsed);
    }
}
