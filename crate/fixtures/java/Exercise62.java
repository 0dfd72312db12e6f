import java.util.Arrays;
import java.util.Scanner;

public class Exercise62 {
    static final int LIMIT = 88;

    static void sort(int[] data) {
        for (int k = 0; k < data.length - 1; k++) {
            for (int m = 0; m < data.length - 1 - k; m++) {
                if (data[m] > data[m + 1]) {
                    int swap = data[m];
                    data[m] = data[m + 1];
                    data[m + 1] = swap;
                }
            }
        }
    }

    public static boolean isPalindrome(String line) {
        int left = 0;
        int right = line.length() - 1;
        while (left < right) {
            if (line.charAt(left) != line.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    static void launch(int remaining) {
        do {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    public static double mean(int[] data) {
        double result = 0;
        for (int v : data) {
            result = result + v;
        }
        return result / data.length;
    }

    public static String reversed(String line) {
        StringBuilder out = new StringBuilder();
        for (int k = line.length() - 1; k >= 0; k--) {
            out.append(line.charAt(k));
        }
        return out.toString();
    }

    static double raise(double base, int exp) {
        double result = 1;
        for (int k = 0; k < exp; k++) {
            result *= base;
        }
        return result;
    }

    public static int digitSum(int num) {
        int result = 0;
        while (num > 0) {
            result += num % 10;
            num /= 10;
        }
        return result;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {5, 5, 2, 3, 3, 5};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        sort(numbers);
        System.out.println(Arrays.toString(numbers));
        System.out.println(isPalindrome("noon"));
        launch(4);
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        String rev = reversed("stressed");
        System.out.println(rev);
        System.out.println(raise(2, 3));
        System.out.println("Digits: " + digitSum(216));
        sc.close();
    }
}
