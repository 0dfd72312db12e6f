import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class Statistics89 {
    public static int digitSum(int x) {
        int total = 0;
        while (x > 0) {
            total += x % 10;
            x /= 10;
        }
        return total;
    }

    public static boolean isPalindrome(String word) {
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

    static void countDown(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    public static double toFahrenheit(double celsius) {
        return celsius * 9 / 5 + 32;
    }

    static int maxValue(int[] nums) {
        int best = nums[0];
        for (int k = 1; k < nums.length; k++) {
            if (nums[k] > best) {
                best = nums[k];
            }
        }
        return best;
    }

    static int fibonacci(int x) {
        int prev = 0;
        int curr = 1;
        for (int k = 0; k < x; k++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
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

    static double power(double x, int n) {
        double result = 1;
        for (int k = 0; k < n; k++) {
            result *= x;
        }
        return result;
    }

    public static int find(int[] nums, int key) {
        for (int k = 0; k < nums.length; k++) {
            if (nums[k] == key) {
                return k;
            }
        }
        return -1;
    }

    public static int sumArray(int[] nums) {
        int total = 0;
        for (int k = 0; k < nums.length; k++) {
            total += nums[k];
        }
        return total;
    }

    static ArrayList<Integer> evens(int[] nums) {
        ArrayList<Integer> result = new ArrayList<>();
        for (int v : nums) {
            if (v % 2 == 0) {
                result.add(v);
            }
        }
        return result;
    }

    public static void drawStars(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    public static long fact(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * fact(x - 1);
    }

    static int vowels(String word) {
        int count = 0;
        for (int k = 0; k < word.length(); k++) {
            char ch = Character.toLowerCase(word.charAt(k));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                count++;
                break;
                default:
                break;
            }
        }
        return count;
    }

    static boolean checkPrime(int x) {
        if (x < 2) {
            return false;
        }
        int d = 2;
        while (d * d <= x) {
            if (x % d == 0) {
                return false;
            }
            d++;
        }
        return true;
    }

    static void sortArray(int[] nums) {
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

    public static int magnitude(int x) {
        return x < 0 ? -x : x;
    }

    static boolean isEven(int x) {
        return x % 2 == 0;
    }

    public static String reversed(String word) {
        StringBuilder builder = new StringBuilder();
        for (int k = word.length() - 1; k >= 0; k--) {
            builder.append(word.charAt(k));
        }
        return builder.toString();
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] nums = new int[size];
        for (int k = 0; k < size; k++) {
            nums[k] = rand.nextInt(100);
        }
        return nums;
    }

    public static double bmi(double weight, double height) {
        double value = weight / Math.pow(height, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static double mean(int[] nums) {
        double total = 0;
        for (int v : nums) {
            total = total + v;
        }
        return total / nums.length;
    }

    public static int parseOrZero(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static int gcd(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static void main(String[] args) {
        int[] numbers = {9, 4, 1, 7, 9, 3, 1};
        System.out.println("Digits: " + digitSum(51848));
        System.out.println(isPalindrome("racecar"));
        countDown(4);
        System.out.println(toFahrenheit(-3.0));
        int top = maxValue(numbers);
        System.out.println("Max is " + top);
        System.out.println("Fib: " + fibonacci(10));
        System.out.println("Grade: " + toLetter(48));
        System.out.println(power(2, 4));
        int pos = find(numbers, 6);
        System.out.println("Found at " + pos);
        System.out.println("Sum: " + sumArray(numbers));
        ArrayList<Integer> even = evens(numbers);
        System.out.println(even.size() + " even numbers");
        drawStars(4);
        System.out.println(fact(11));
        System.out.println(vowels("banana"));
        for (int q = 2; q < 11; q++) {
            if (checkPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        sortArray(numbers);
        System.out.println(Arrays.toString(numbers));
        System.out.println(magnitude(8));
        if (isEven(25)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        String rev = reversed("level");
        System.out.println(rev);
        int[] random = fillRandom(8);
        System.out.println(random.length);
        System.out.println("BMI: " + bmi(68.5, 1.79));
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        int parsed = parseOrZero("42");
        System.out.println(parsed);
        System.out.println("GCD: " + gcd(68, 57));
    }
}
