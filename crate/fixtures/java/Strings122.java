import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class Strings122 {
    static final int LIMIT = 80;

    static double power(double base, int exp) {
        double result = 1;
        for (int k = 0; k < exp; k++) {
            result *= base;
        }
        return result;
    }

    public static double celsiusToF(double celsius) {
        return celsius * 9 / 5 + 32;
    }

    static void sortArray(int[] nums) {
        for (int k = 0; k < nums.length - 1; k++) {
            for (int m = 0; m < nums.length - 1 - k; m++) {
                if (nums[m] > nums[m + 1]) {
                    int tmp = nums[m];
                    nums[m] = nums[m + 1];
                    nums[m + 1] = tmp;
                }
            }
        }
    }

    static ArrayList<Integer> filterEven(int[] nums) {
        ArrayList<Integer> list = new ArrayList<>();
        for (int v : nums) {
            if (v % 2 == 0) {
                list.add(v);
            }
        }
        return list;
    }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static int totalOf(int[] nums) {
        int acc = 0;
        for (int k = 0; k < nums.length; k++) {
            acc += nums[k];
        }
        return acc;
    }

    static int fib(int n) {
        int prev = 0;
        int curr = 1;
        for (int k = 0; k < n; k++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    public static double mean(int[] nums) {
        double acc = 0;
        for (int v : nums) {
            acc = acc + v;
        }
        return acc / nums.length;
    }

    public static int absolute(int n) {
        return n < 0 ? -n : n;
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

    public static int indexOf(int[] nums, int key) {
        for (int k = 0; k < nums.length; k++) {
            if (nums[k] == key) {
                return k;
            }
        }
        return -1;
    }

    public static double bodyMassIndex(double weight, double height) {
        double value = weight / Math.pow(height, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static int digitSum(int n) {
        int acc = 0;
        while (n > 0) {
            acc += n % 10;
            n /= 10;
        }
        return acc;
    }

    static boolean prime(int n) {
        if (n < 2) {
            return false;
        }
        int d = 2;
        while (d * d <= n) {
            if (n % d == 0) {
                return false;
            }
            d++;
        }
        return true;
    }

    static void countdown(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    public static int safeParse(String line) {
        try {
            return Integer.parseInt(line.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static String backwards(String line) {
        StringBuilder builder = new StringBuilder();
        for (int k = line.length() - 1; k >= 0; k--) {
            builder.append(line.charAt(k));
        }
        return builder.toString();
    }

    static char toLetter(int points) {
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

    static boolean even(int n) {
        return n % 2 == 0;
    }

    static int countVowels(String line) {
        int found = 0;
        for (int k = 0; k < line.length(); k++) {
            char ch = Character.toLowerCase(line.charAt(k));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                found++;
                break;
                default:
                break;
            }
        }
        return found;
    }

    public static long fact(int n) {
        if (n <= 1) {
            return 1;
        }
        return n * fact(n - 1);
    }

    public static void drawStars(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static int findMax(int[] nums) {
        int max = nums[0];
        for (int k = 1; k < nums.length; k++) {
            if (nums[k] > max) {
                max = nums[k];
            }
        }
        return max;
    }

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] nums = new int[size];
        for (int k = 0; k < size; k++) {
            nums[k] = rand.nextInt(100);
        }
        return nums;
    }

    public static void main(String[] args) {
        int[] numbers = {3, 8, 3, 8, 1};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        System.out.println(power(2, 9));
        System.out.println(celsiusToF(-8.0));
        sortArray(numbers);
        System.out.println(Arrays.toString(numbers));
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println("GCD: " + greatestDivisor(69, 12));
        System.out.println("Sum: " + totalOf(numbers));
        System.out.println("Fib: " + fib(6));
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        System.out.println(absolute(47));
        System.out.println(isPalindrome("hello"));
        int pos = indexOf(numbers, 9);
        System.out.println("Found at " + pos);
        System.out.println("BMI: " + bodyMassIndex(77.5, 1.64));
        System.out.println("Digits: " + digitSum(60229));
        for (int q = 2; q < 12; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        countdown(5);
        int parsed = safeParse(" 7 ");
        System.out.println(parsed);
        String rev = backwards("stressed");
        System.out.println(rev);
        System.out.println("Grade: " + toLetter(41));
        if (even(5)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println(countVowels("hello world"));
        System.out.println(fact(4));
        drawStars(5);
        int top = findMax(numbers);
        System.out.println("Max is " + top);
        int[] random = randomFill(8);
        System.out.println(random.length);
    }
}
