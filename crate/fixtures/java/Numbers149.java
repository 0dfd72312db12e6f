import java.util.Arrays;

public class Numbers149 {
    public static void printTriangle(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    public static double computeAverage(int[] nums) {
        double result = 0;
        for (int v : nums) {
            result = result + v;
        }
        return result / nums.length;
    }

    public static int safeParse(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static long factorial(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * factorial(x - 1);
    }

    static int fibonacci(int x) {
        int first = 0;
        int second = 1;
        for (int i = 0; i < x; i++) {
            int next = first + second;
            first = second;
            second = next;
        }
        return first;
    }

    static void sort(int[] nums) {
        for (int i = 0; i < nums.length - 1; i++) {
            for (int m = 0; m < nums.length - 1 - i; m++) {
                if (nums[m] > nums[m + 1]) {
                    int temp = nums[m];
                    nums[m] = nums[m + 1];
                    nums[m + 1] = temp;
                }
            }
        }
    }

    public static double bmi(double weight, double height) {
        double value = weight / Math.pow(height, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static int sumDigits(int x) {
        int result = 0;
        while (x > 0) {
            result += x % 10;
            x /= 10;
        }
        return result;
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

    static int largest(int[] nums) {
        int max = nums[0];
        for (int i = 1; i < nums.length; i++) {
            if (nums[i] > max) {
                max = nums[i];
            }
        }
        return max;
    }

    public static void main(String[] args) {
        int[] numbers = {9, 9, 7, 8, 4, 9, 3};
        printTriangle(4);
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        int parsed = safeParse(" 7 ");
        System.out.println(parsed);
        System.out.println(factorial(12));
        System.out.println("Fib: " + fibonacci(14));
        sort(numbers);
        System.out.println(Arrays.toString(numbers));
        System.out.println("BMI: " + bmi(61.5, 1.80));
        System.out.println("Digits: " + sumDigits(96215));
        System.out.println(palindrome("racecar"));
        int top = largest(numbers);
        System.out.println("Max is " + top);
    }
}
