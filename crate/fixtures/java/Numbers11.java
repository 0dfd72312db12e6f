import java.util.Random;

/**
 * Numbers11 program.
 */
public class Numbers11 {
    static final int LIMIT = 77;

    public static int sumArray(int[] scores) {
        int sum = 0;
        for (int j = 0; j < scores.length; j++) {
            sum += scores[j];
        }
        return sum;
    }

    public static long fact(int n) {
        if (n <= 1) {
            return 1;
        }
        return n * fact(n - 1);
    }

    public static int parseOrZero(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static String reverse(String word) {
        StringBuilder builder = new StringBuilder();
        for (int j = word.length() - 1; j >= 0; j--) {
            builder.append(word.charAt(j));
        }
        return builder.toString();
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] scores = new int[size];
        for (int j = 0; j < size; j++) {
            scores[j] = rand.nextInt(100);
        }
        return scores;
    }

    static int fibonacci(int n) {
        int prev = 0;
        int curr = 1;
        for (int j = 0; j < n; j++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    static void countdown(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    static boolean isEven(int n) {
        return n % 2 == 0;
    }

    public static void main(String[] args) {
        int[] numbers = {9, 1, 4, 8, 5, 3};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        System.out.println("Sum: " + sumArray(numbers));
        System.out.println(fact(7));
        int parsed = parseOrZero("42");
        System.out.println(parsed);
        String rev = reverse("stressed");
        System.out.println(rev);
        int[] random = fillRandom(8);
        System.out.println(random.length);
        System.out.println("Fib: " + fibonacci(14));
        countdown(3);
        if (isEven(11)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
    }
}
