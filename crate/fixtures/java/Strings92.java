// Homework
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Scanner;

/**
 * Strings92 program.
 */
public class Strings92 {
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

    static ArrayList<Integer> collectEven(int[] values) {
        ArrayList<Integer> result = new ArrayList<>();
        for (int v : values) {
            if (v % 2 == 0) {
                result.add(v);
            }
        }
        return result;
    }

    public static String backwards(String line) {
        StringBuilder sb = new StringBuilder();
        for (int j = line.length() - 1; j >= 0; j--) {
            sb.append(line.charAt(j));
        }
        return sb.toString();
    }

    static int gcd(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static int vowels(String line) {
        int c = 0;
        for (int j = 0; j < line.length(); j++) {
            char ch = Character.toLowerCase(line.charAt(j));
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

    static void countdown(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
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

    public static int toNumber(String line) {
        try {
            return Integer.parseInt(line.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static double mean(int[] values) {
        double total = 0;
        for (int v : values) {
            total = total + v;
        }
        return total / values.length;
    }

    public static long fact(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * fact(num - 1);
    }

    static void sort(int[] values) {
        for (int j = 0; j < values.length - 1; j++) {
            for (int m = 0; m < values.length - 1 - j; m++) {
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
        int[] numbers = {4, 7, 2, 3, 9};
        Point p = new Point(4, 9);
        System.out.println(p.distance());
        ArrayList<Integer> even = collectEven(numbers);
        System.out.println(even.size() + " even numbers");
        String rev = backwards("stressed");
        System.out.println(rev);
        System.out.println("GCD: " + gcd(48, 33));
        System.out.println(vowels("programming"));
        countdown(3);
        System.out.println(isPalindrome("noon"));
        int parsed = toNumber("abc");
        System.out.println(parsed);
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        System.out.println(fact(7));
        sort(numbers);
        System.out.println(Arrays.toString(numbers));
        sc.close();
    }
}
