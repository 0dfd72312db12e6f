/**
 * Counter20 program.
 */
public class Counter20 {
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

    public static String reversed(String line) {
        StringBuilder sb = new StringBuilder();
        for (int j = line.length() - 1; j >= 0; j--) {
            sb.append(line.charAt(j));
        }
        return sb.toString();
    }

    public static void printTriangle(int rows) {
        for (int row = 1; row <= rows; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
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

    static boolean isEven(int x) {
        return x % 2 == 0;
    }

    public static double toFahrenheit(double c) {
        return c * 9 / 5 + 32;
    }

    public static int search(int[] values, int key) {
        for (int j = 0; j < values.length; j++) {
            if (values[j] == key) {
                return j;
            }
        }
        return -1;
    }

    static int fibonacci(int x) {
        int first = 0;
        int second = 1;
        for (int j = 0; j < x; j++) {
            int next = first + second;
            first = second;
            second = next;
        }
        return first;
    }

    public static void main(String[] args) {
        int[] numbers = {6, 8, 3, 9, 6, 5, 5};
        Point p = new Point(6, 4);
        System.out.println(p.distance());
        String rev = reversed("java");
        System.out.println(rev);
        printTriangle(5);
        System.out.println("Digits: " + sumDigits(54862));
        if (isEven(1)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println(toFahrenheit(28.0));
        int pos = search(numbers, 8);
        System.out.println("Found at " + pos);
        System.out.println("Fib: " + fibonacci(8));
    }
}
