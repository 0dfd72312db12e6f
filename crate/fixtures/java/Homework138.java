import java.util.Arrays;
import java.util.Random;

public class Homework138 {
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

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] scores = new int[size];
        for (int k = 0; k < size; k++) {
            scores[k] = rand.nextInt(100);
        }
        return scores;
    }

    static void sort(int[] scores) {
        for (int k = 0; k < scores.length - 1; k++) {
            for (int m = 0; m < scores.length - 1 - k; m++) {
                if (scores[m] > scores[m + 1]) {
                    int temp = scores[m];
                    scores[m] = scores[m + 1];
                    scores[m + 1] = temp;
                }
            }
        }
    }

    static double pow(double b, int e) {
        double result = 1;
        for (int k = 0; k < e; k++) {
            result *= b;
        }
        return result;
    }

    public static long factorial(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * factorial(x - 1);
    }

    static void countdown(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    public static int sumDigits(int x) {
        int total = 0;
        while (x > 0) {
            total += x % 10;
            x /= 10;
        }
        return total;
    }

    static char toLetter(int mark) {
        if (mark >= 90) {
            return 'A';
        } else if (mark >= 80) {
            return 'B';
        } else if (mark >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    public static String reversed(String text) {
        StringBuilder builder = new StringBuilder();
        for (int k = text.length() - 1; k >= 0; k--) {
            builder.append(text.charAt(k));
        }
        return builder.toString();
    }

    public static void main(String[] args) {
        int[] numbers = {7, 7, 6, 2};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        Point p = new Point(5, 2);
        System.out.println(p.distance());
        int[] random = randomFill(5);
        System.out.println(random.length);
        sort(numbers);
        System.out.println(Arrays.toString(numbers));
        System.out.println(pow(2, 9));
        System.out.println(factorial(8));
        countdown(5);
        System.out.println("Digits: " + sumDigits(9054));
        System.out.println("Grade: " + toLetter(46));
        String rev = reversed("java");
        System.out.println(rev);
    }
}
