// Exercise
import java.util.Arrays;
import java.util.Random;

/**
 * Calculator111 program.
 */
public class Calculator111 {
    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] values = new int[size];
        for (int k = 0; k < size; k++) {
            values[k] = rand.nextInt(100);
        }
        return values;
    }

    static char grade(int points) {
        if (points >= 90) {
            return 'A';
        } else if (points >= 80) {
            return 'B';
        } else if (points >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    static void sortArray(int[] values) {
        for (int k = 0; k < values.length - 1; k++) {
            for (int m = 0; m < values.length - 1 - k; m++) {
                if (values[m] > values[m + 1]) {
                    int temp = values[m];
                    values[m] = values[m + 1];
                    values[m + 1] = temp;
                }
            }
        }
    }

    static int fibonacci(int num) {
        int a = 0;
        int b = 1;
        for (int k = 0; k < num; k++) {
            int next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    public static int safeParse(String text) {
        try {
            return Integer.parseInt(text.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static boolean checkPrime(int num) {
        if (num < 2) {
            return false;
        }
        int d = 2;
        while (d * d <= num) {
            if (num % d == 0) {
                return false;
            }
            d++;
        }
        return true;
    }

    public static void main(String[] args) {
        int[] numbers = {3, 6, 7, 8, 6};
        int[] random = fillRandom(3);
        System.out.println(random.length);
        System.out.println("Grade: " + grade(91));
        sortArray(numbers);
        System.out.println(Arrays.toString(numbers));
        System.out.println("Fib: " + fibonacci(8));
        int parsed = safeParse("abc");
        System.out.println(parsed);
        for (int q = 2; q < 30; q++) {
            if (checkPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
    }
}
