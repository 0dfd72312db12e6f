import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

/**
 * Student152 program.
 */
public class Student152 {
    static int largest(int[] values) {
        int best = values[0];
        for (int i = 1; i < values.length; i++) {
            if (values[i] > best) {
                best = values[i];
            }
        }
        return best;
    }

    public static double computeBmi(double wgt, double hgt) {
        double value = wgt / Math.pow(hgt, 2);
        return Math.round(value * 10) / 10.0;
    }

    static void bubbleSort(int[] values) {
        for (int i = 0; i < values.length - 1; i++) {
            for (int m = 0; m < values.length - 1 - i; m++) {
                if (values[m] > values[m + 1]) {
                    int temp = values[m];
                    values[m] = values[m + 1];
                    values[m + 1] = temp;
                }
            }
        }
    }

    static void countdown(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    public static int sumArray(int[] values) {
        int result = 0;
        for (int i = 0; i < values.length; i++) {
            result += values[i];
        }
        return result;
    }

    public static int search(int[] values, int wanted) {
        for (int i = 0; i < values.length; i++) {
            if (values[i] == wanted) {
                return i;
            }
        }
        return -1;
    }

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] values = new int[size];
        for (int i = 0; i < size; i++) {
            values[i] = rand.nextInt(100);
        }
        return values;
    }

    public static int digitSum(int x) {
        int result = 0;
        while (x > 0) {
            result += x % 10;
            x /= 10;
        }
        return result;
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

    public static double toFahrenheit(double celsius) {
        return celsius * 9 / 5 + 32;
    }

    public static String reversed(String text) {
        StringBuilder sb = new StringBuilder();
        for (int i = text.length() - 1; i >= 0; i--) {
            sb.append(text.charAt(i));
        }
        return sb.toString();
    }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
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

    public static boolean isPalindrome(String text) {
        int left = 0;
        int right = text.length() - 1;
        while (left < right) {
            if (text.charAt(left) != text.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static double computeAverage(int[] values) {
        double result = 0;
        for (int v : values) {
            result = result + v;
        }
        return result / values.length;
    }

    static boolean divisibleByTwo(int x) {
        return x % 2 == 0;
    }

    static int countVowels(String text) {
        int found = 0;
        for (int i = 0; i < text.length(); i++) {
            char ch = Character.toLowerCase(text.charAt(i));
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

    static double power(double x, int n) {
        double result = 1;
        for (int i = 0; i < n; i++) {
            result *= x;
        }
        return result;
    }

    public static void pattern(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    public static int parseOrZero(String text) {
        try {
            return Integer.parseInt(text.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static int absolute(int x) {
        return x < 0 ? -x : x;
    }

    static char grade(int score) {
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

    static ArrayList<Integer> collectEven(int[] values) {
        ArrayList<Integer> items = new ArrayList<>();
        for (int v : values) {
            if (v % 2 == 0) {
                items.add(v);
            }
        }
        return items;
    }

    public static long factorial(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * factorial(x - 1);
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {9, 4, 2, 1, 5, 4, 8};
        int top = largest(numbers);
        System.out.println("Max is " + top);
        System.out.println("BMI: " + computeBmi(85.5, 1.85));
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
        countdown(5);
        System.out.println("Sum: " + sumArray(numbers));
        int pos = search(numbers, 8);
        System.out.println("Found at " + pos);
        int[] random = randomFill(5);
        System.out.println(random.length);
        System.out.println("Digits: " + digitSum(1639));
        for (int q = 2; q < 25; q++) {
            if (checkPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(toFahrenheit(20.0));
        String rev = reversed("stressed");
        System.out.println(rev);
        System.out.println("GCD: " + greatestDivisor(48, 15));
        System.out.println("Fib: " + fibonacci(16));
        System.out.println(isPalindrome("noon"));
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        if (divisibleByTwo(23)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println(countVowels("hello world"));
        System.out.println(power(2, 10));
        pattern(4);
        int parsed = parseOrZero("42");
        System.out.println(parsed);
        System.out.println(absolute(-8));
        System.out.println("Grade: " + grade(85));
        ArrayList<Integer> even = collectEven(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println(factorial(8));
        sc.close();
    }
}
