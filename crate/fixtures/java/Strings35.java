import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

public class Strings35 {
    static class Point {
        int x;
        int y;
        Point(int x, int y) {
            this.x = x;
            this.y = y;
        }
        double distance() {
            return Math.sqrt(x * x + y * y);
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

    public static long factorial(int n) {
        if (n <= 1) {
            return 1;
        }
        return n * factorial(n - 1);
    }

    public static int addAll(int[] values) {
        int total = 0;
        for (int i = 0; i < values.length; i++) {
            total += values[i];
        }
        return total;
    }

    static int fib(int n) {
        int prev = 0;
        int curr = 1;
        for (int i = 0; i < n; i++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    static int gcd(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static int digitSum(int n) {
        int total = 0;
        while (n > 0) {
            total += n % 10;
            n /= 10;
        }
        return total;
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] values = new int[size];
        for (int i = 0; i < size; i++) {
            values[i] = rand.nextInt(100);
        }
        return values;
    }

    public static void printTriangle(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static boolean prime(int n) {
        if (n < 2) {
            return false;
        }
        int factor = 2;
        while (factor * factor <= n) {
            if (n % factor == 0) {
                return false;
            }
            factor++;
        }
        return true;
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

    static boolean isEven(int n) {
        return n % 2 == 0;
    }

    public static String backwards(String input) {
        StringBuilder sb = new StringBuilder();
        for (int i = input.length() - 1; i >= 0; i--) {
            sb.append(input.charAt(i));
        }
        return sb.toString();
    }

    public static double average(int[] values) {
        double total = 0;
        for (int v : values) {
            total = total + v;
        }
        return total / values.length;
    }

    static double power(double b, int e) {
        double result = 1;
        for (int i = 0; i < e; i++) {
            result *= b;
        }
        return result;
    }

    static int findMax(int[] values) {
        int biggest = values[0];
        for (int i = 1; i < values.length; i++) {
            if (values[i] > biggest) {
                biggest = values[i];
            }
        }
        return biggest;
    }

    public static int absolute(int n) {
        return n < 0 ? -n : n;
    }

    static void countDown(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    static ArrayList<Integer> filterEven(int[] values) {
        ArrayList<Integer> result = new ArrayList<>();
        for (int v : values) {
            if (v % 2 == 0) {
                result.add(v);
            }
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

    public static int find(int[] values, int target) {
        for (int i = 0; i < values.length; i++) {
            if (values[i] == target) {
                return i;
            }
        }
        return -1;
    }

    static int vowels(String input) {
        int c = 0;
        for (int i = 0; i < input.length(); i++) {
            char ch = Character.toLowerCase(input.charAt(i));
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

    public static double convert(double c) {
        return c * 9 / 5 + 32;
    }

    public static double bodyMassIndex(double weight, double height) {
        double value = weight / Math.pow(height, 2);
        return Math.round(value * 10) / 10.0;
    }

    static void bubbleSort(int[] values) {
        for (int i = 0; i < values.length - 1; i++) {
            for (int m = 0; m < values.length - 1 - i; m++) {
                if (values[m] > values[m + 1]) {
                    int tmp = values[m];
                    values[m] = values[m + 1];
                    values[m + 1] = tmp;
                }
            }
        }
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {1, 6, 1, 9, 6, 6, 7};
        Point p = new Point(1, 4);
        System.out.println(p.distance());
        System.out.println(palindrome("hello"));
        System.out.println(factorial(5));
        System.out.println("Sum: " + addAll(numbers));
        System.out.println("Fib: " + fib(18));
        System.out.println("GCD: " + gcd(53, 60));
        System.out.println("Digits: " + digitSum(38245));
        int[] random = fillRandom(7);
        System.out.println(random.length);
        printTriangle(6);
        for (int q = 2; q < 25; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println("Grade: " + toLetter(97));
        if (isEven(19)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        String rev = backwards("java");
        System.out.println(rev);
        double avg = average(numbers);
        System.out.println("Average: " + avg);
        System.out.println(power(2, 8));
        int top = findMax(numbers);
        System.out.println("Max is " + top);
        System.out.println(absolute(10));
        countDown(3);
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        int parsed = parseOrZero(" 7 ");
        System.out.println(parsed);
        int pos = find(numbers, 6);
        System.out.println("Found at " + pos);
        System.out.println(vowels("hello world"));
        System.out.println(convert(23.0));
        System.out.println("BMI: " + bodyMassIndex(63.5, 1.84));
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
        sc.close();
    }
}
