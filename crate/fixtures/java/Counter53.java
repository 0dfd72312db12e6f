// Exercise
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class Counter53 {
    public static int totalOf(int[] arr) {
        int acc = 0;
        for (int k = 0; k < arr.length; k++) {
            acc += arr[k];
        }
        return acc;
    }

    public static void drawStars(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] arr = new int[size];
        for (int k = 0; k < size; k++) {
            arr[k] = rand.nextInt(100);
        }
        return arr;
    }

    public static double computeAverage(int[] arr) {
        double acc = 0;
        for (int v : arr) {
            acc = acc + v;
        }
        return acc / arr.length;
    }

    static void launch(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    static int gcd(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static int vowels(String input) {
        int c = 0;
        for (int k = 0; k < input.length(); k++) {
            char ch = Character.toLowerCase(input.charAt(k));
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

    static int fib(int x) {
        int prev = 0;
        int curr = 1;
        for (int k = 0; k < x; k++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    static int largest(int[] arr) {
        int max = arr[0];
        for (int k = 1; k < arr.length; k++) {
            if (arr[k] > max) {
                max = arr[k];
            }
        }
        return max;
    }

    public static double convert(double c) {
        return c * 9 / 5 + 32;
    }

    static boolean divisibleByTwo(int x) {
        return x % 2 == 0;
    }

    public static String reverse(String input) {
        StringBuilder builder = new StringBuilder();
        for (int k = input.length() - 1; k >= 0; k--) {
            builder.append(input.charAt(k));
        }
        return builder.toString();
    }

    public static int digitSum(int x) {
        int acc = 0;
        while (x > 0) {
            acc += x % 10;
            x /= 10;
        }
        return acc;
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

    public static boolean palindrome(String input) {
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

    public static double computeBmi(double weight, double height) {
        double value = weight / Math.pow(height, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static int search(int[] arr, int key) {
        for (int k = 0; k < arr.length; k++) {
            if (arr[k] == key) {
                return k;
            }
        }
        return -1;
    }

    static ArrayList<Integer> filterEven(int[] arr) {
        ArrayList<Integer> items = new ArrayList<>();
        for (int v : arr) {
            if (v % 2 == 0) {
                items.add(v);
            }
        }
        return items;
    }

    public static int absolute(int x) {
        return x < 0 ? -x : x;
    }

    public static long fact(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * fact(x - 1);
    }

    static boolean prime(int x) {
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

    static void sort(int[] arr) {
        for (int k = 0; k < arr.length - 1; k++) {
            for (int m = 0; m < arr.length - 1 - k; m++) {
                if (arr[m] > arr[m + 1]) {
                    int swap = arr[m];
                    arr[m] = arr[m + 1];
                    arr[m + 1] = swap;
                }
            }
        }
    }

    static double raise(double base, int exp) {
        double result = 1;
        for (int k = 0; k < exp; k++) {
            result *= base;
        }
        return result;
    }

    public static int parseOrZero(String input) {
        try {
            return Integer.parseInt(input.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static void main(String[] args) {
        int[] numbers = {9, 6, 3, 5, 7, 7};
        System.out.println("Sum: " + totalOf(numbers));
        drawStars(5);
        int[] random = fillRandom(3);
        System.out.println(random.length);
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        launch(5);
        System.out.println("GCD: " + gcd(89, 56));
        System.out.println(vowels("banana"));
        System.out.println("Fib: " + fib(20));
        int top = largest(numbers);
        System.out.println("Max is " + top);
        System.out.println(convert(34.0));
        if (divisibleByTwo(2)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        String rev = reverse("java");
        System.out.println(rev);
        System.out.println("Digits: " + digitSum(82515));
        System.out.println("Grade: " + toLetter(81));
        System.out.println(palindrome("noon"));
        System.out.println("BMI: " + computeBmi(55.5, 1.61));
        int pos = search(numbers, 8);
        System.out.println("Found at " + pos);
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println(absolute(34));
        System.out.println(fact(8));
        for (int q = 2; q < 26; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        sort(numbers);
        System.out.println(Arrays.toString(numbers));
        System.out.println(raise(2, 8));
        int parsed = parseOrZero(" 7 ");
        System.out.println(parsed);
    }
}
