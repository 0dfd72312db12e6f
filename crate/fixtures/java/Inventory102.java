import java.util.Arrays;

public class Inventory102 {
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

    static void sortArray(int[] scores) {
        for (int i = 0; i < scores.length - 1; i++) {
            for (int m = 0; m < scores.length - 1 - i; m++) {
                if (scores[m] > scores[m + 1]) {
                    int temp = scores[m];
                    scores[m] = scores[m + 1];
                    scores[m + 1] = temp;
                }
            }
        }
    }

    public static long fact(int n) {
        if (n <= 1) {
            return 1;
        }
        return n * fact(n - 1);
    }

    static char toLetter(int score) {
        if (score >= 90) {
            return 'A';
        } else if (score >= 80) {
            return 'B';
        } else if (score >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    public static int abs(int n) {
        return n < 0 ? -n : n;
    }

    public static boolean isPalindrome(String input) {
        int left = 0;
        int right = input.length() - 1;
        while (left < right) {
            if (input.charAt(left) != input.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static double computeAverage(int[] scores) {
        double result = 0;
        for (int v : scores) {
            result = result + v;
        }
        return result / scores.length;
    }

    public static int sumArray(int[] scores) {
        int result = 0;
        for (int i = 0; i < scores.length; i++) {
            result += scores[i];
        }
        return result;
    }

    static int findMax(int[] scores) {
        int max = scores[0];
        for (int i = 1; i < scores.length; i++) {
            if (scores[i] > max) {
                max = scores[i];
            }
        }
        return max;
    }

    public static void main(String[] args) {
        int[] numbers = {6, 7, 6, 8, 7};
        for (int q = 2; q < 27; q++) {
            if (isPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        sortArray(numbers);
        System.out.println(Arrays.toString(numbers));
        System.out.println(fact(3));
        System.out.println("Grade: " + toLetter(58));
        System.out.println(abs(-14));
        System.out.println(isPalindrome("hello"));
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        System.out.println("Sum: " + sumArray(numbers));
        int top = findMax(numbers);
        System.out.println("Max is " + top);
    }
}
