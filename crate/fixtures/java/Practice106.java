import java.util.Arrays;

public class Practice106 {
    static boolean even(int n) {
        return n % 2 == 0;
    }

    static void bubbleSort(int[] values) {
        for (int k = 0; k < values.length - 1; k++) {
            for (int m = 0; m < values.length - 1 - k; m++) {
                if (values[m] > values[m + 1]) {
                    int tmp = values[m];
                    values[m] = values[m + 1];
                    values[m + 1] = tmp;
                }
            }
        }
    }

    static int largest(int[] values) {
        int best = values[0];
        for (int k = 1; k < values.length; k++) {
            if (values[k] > best) {
                best = values[k];
            }
        }
        return best;
    }

    public static void pattern(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static long fact(int n) {
        if (n <= 1) {
            return 1;
        }
        return n * fact(n - 1);
    }

    public static double toFahrenheit(double celsius) {
        return celsius * 9 / 5 + 32;
    }

    public static String reversed(String word) {
        StringBuilder out = new StringBuilder();
        for (int k = word.length() - 1; k >= 0; k--) {
            out.append(word.charAt(k));
        }
        return out.toString();
    }

    public static void main(String[] args) {
        int[] numbers = {3, 3, 9};
        if (even(22)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
        int top = largest(numbers);
        System.out.println("Max is " + top);
        pattern(5);
        System.out.println("GCD: " + greatestDivisor(45, 48));
        System.out.println(fact(8));
        System.out.println(toFahrenheit(39.0));
        String rev = reversed("java");
        System.out.println(rev);
    }
}
