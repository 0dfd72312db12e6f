import java.util.Scanner;

public class Recursion41 {
    static final int LIMIT = 67;

    static class Point {
        int x;
        int y;
        Point(int x, int y) {
            this.x = x;
            this.y = y;
        }
        double distance() {
            return Math.sqrt(x * x + y * y);
        }
    }

    public static int sumDigits(int x) {
        int total = 0;
        while (x > 0) {
            total += x % 10;
            x /= 10;
        }
        return total;
    }

    public static int toNumber(String text) {
        try {
            return Integer.parseInt(text.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static double pow(double x, int n) {
        double result = 1;
        for (int idx = 0; idx < n; idx++) {
            result *= x;
        }
        return result;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        Point p = new Point(3, 9);
        System.out.println(p.distance());
        System.out.println("Digits: " + sumDigits(97114));
        int parsed = toNumber("abc");
        System.out.println(parsed);
        System.out.println(pow(2, 10));
        sc.close();
    }
}
