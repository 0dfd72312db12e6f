/**
 * Recursion86 program.
 */
public class Recursion86 {
    public static double bmi(double wgt, double hgt) {
        double value = wgt / Math.pow(hgt, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static double computeAverage(int[] scores) {
        double acc = 0;
        for (int v : scores) {
            acc = acc + v;
        }
        return acc / scores.length;
    }

    public static int abs(int num) {
        return num < 0 ? -num : num;
    }

    static int findMax(int[] scores) {
        int max = scores[0];
        for (int k = 1; k < scores.length; k++) {
            if (scores[k] > max) {
                max = scores[k];
            }
        }
        return max;
    }

    public static String reverse(String word) {
        StringBuilder builder = new StringBuilder();
        for (int k = word.length() - 1; k >= 0; k--) {
            builder.append(word.charAt(k));
        }
        return builder.toString();
    }

    public static boolean palindrome(String word) {
        int left = 0;
        int right = word.length() - 1;
        while (left < right) {
            if (word.charAt(left) != word.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static long factorial(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * factorial(num - 1);
    }

    static void launch(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    static double power(double base, int exp) {
        double result = 1;
        for (int k = 0; k < exp; k++) {
            result *= base;
        }
        return result;
    }

    public static void main(String[] args) {
        int[] numbers = {2, 5, 6, 4, 1, 2};
        System.out.println("BMI: " + bmi(86.5, 1.81));
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        System.out.println(abs(-3));
        int top = findMax(numbers);
        System.out.println("Max is " + top);
        String rev = reverse("java");
        System.out.println(rev);
        System.out.println(palindrome("noon"));
        System.out.println(factorial(11));
        launch(5);
        System.out.println(power(2, 8));
    }
}
