// Homework
import java.util.Arrays;
import java.util.Scanner;

public class Library130 {
    public static int addAll(int[] nums) {
        int result = 0;
        for (int k = 0; k < nums.length; k++) {
            result += nums[k];
        }
        return result;
    }

    static int vowels(String word) {
        int c = 0;
        for (int k = 0; k < word.length(); k++) {
            char ch = Character.toLowerCase(word.charAt(k));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                c++;
                break;
                default:
                break;
            }
        }
        return c;
    }

    public static int digitSum(int num) {
        int result = 0;
        while (num > 0) {
            result += num % 10;
            num /= 10;
        }
        return result;
    }

    static void bubbleSort(int[] nums) {
        for (int k = 0; k < nums.length - 1; k++) {
            for (int m = 0; m < nums.length - 1 - k; m++) {
                if (nums[m] > nums[m + 1]) {
                    int swap = nums[m];
                    nums[m] = nums[m + 1];
                    nums[m + 1] = swap;
                }
            }
        }
    }

    public static int safeParse(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static long factorial(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * factorial(num - 1);
    }

    static int largest(int[] nums) {
        int best = nums[0];
        for (int k = 1; k < nums.length; k++) {
            if (nums[k] > best) {
                best = nums[k];
            }
        }
        return best;
    }

    public static double computeAverage(int[] nums) {
        double result = 0;
        for (int v : nums) {
            result = result + v;
        }
        return result / nums.length;
    }

    public static String backwards(String word) {
        StringBuilder sb = new StringBuilder();
        for (int k = word.length() - 1; k >= 0; k--) {
            sb.append(word.charAt(k));
        }
        return sb.toString();
    }

    static boolean prime(int num) {
        if (num < 2) {
            return false;
        }
        int factor = 2;
        while (factor * factor <= num) {
            if (num % factor == 0) {
                return false;
            }
            factor++;
        }
        return true;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {2, 6, 6, 3, 8, 7};
        System.out.println("Sum: " + addAll(numbers));
        System.out.println(vowels("programming"));
        System.out.println("Digits: " + digitSum(14843));
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
        int parsed = safeParse("abc");
        System.out.println(parsed);
        System.out.println(factorial(8));
        int top = largest(numbers);
        System.out.println("Max is " + top);
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        String rev = backwards("stressed");
        System.out.println(rev);
        for (int q = 2; q < 15; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        sc.close();
    }
}
