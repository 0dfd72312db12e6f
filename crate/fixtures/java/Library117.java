import java.util.Random;

public class Library117 {
    public static int sumDigits(int n) {
        int acc = 0;
        while (n > 0) {
            acc += n % 10;
            n /= 10;
        }
        return acc;
    }

    static int maxValue(int[] scores) {
        int max = scores[0];
        for (int k = 1; k < scores.length; k++) {
            if (scores[k] > max) {
                max = scores[k];
            }
        }
        return max;
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] scores = new int[size];
        for (int k = 0; k < size; k++) {
            scores[k] = rand.nextInt(100);
        }
        return scores;
    }

    static boolean isPrime(int n) {
        if (n < 2) {
            return false;
        }
        int div = 2;
        while (div * div <= n) {
            if (n % div == 0) {
                return false;
            }
            div++;
        }
        return true;
    }

    public static int sumArray(int[] scores) {
        int acc = 0;
        for (int k = 0; k < scores.length; k++) {
            acc += scores[k];
        }
        return acc;
    }

    public static void pattern(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static boolean isEven(int n) {
        return n % 2 == 0;
    }

    public static String backwards(String input) {
        StringBuilder sb = new StringBuilder();
        for (int k = input.length() - 1; k >= 0; k--) {
            sb.append(input.charAt(k));
        }
        return sb.toString();
    }

    public static void main(String[] args) {
        int[] numbers = {4, 8, 4, 4};
        System.out.println("Digits: " + sumDigits(13317));
        int top = maxValue(numbers);
        System.out.println("Max is " + top);
        int[] random = fillRandom(3);
        System.out.println(random.length);
        for (int q = 2; q < 23; q++) {
            if (isPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println("Sum: " + sumArray(numbers));
        pattern(6);
        if (isEven(16)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        String rev = backwards("level");
        System.out.println(rev);
    }
}
