import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class Arrays182 {
    static final int LIMIT = 74;

    static void countdown(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    static int vowels(String line) {
        int count = 0;
        for (int idx = 0; idx < line.length(); idx++) {
            char ch = Character.toLowerCase(line.charAt(idx));
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

    public static int abs(int x) {
        return x < 0 ? -x : x;
    }

    public static int digitSum(int x) {
        int result = 0;
        while (x > 0) {
            result += x % 10;
            x /= 10;
        }
        return result;
    }

    public static int search(int[] data, int target) {
        for (int idx = 0; idx < data.length; idx++) {
            if (data[idx] == target) {
                return idx;
            }
        }
        return -1;
    }

    static void sort(int[] data) {
        for (int idx = 0; idx < data.length - 1; idx++) {
            for (int m = 0; m < data.length - 1 - idx; m++) {
                if (data[m] > data[m + 1]) {
                    int swap = data[m];
                    data[m] = data[m + 1];
                    data[m + 1] = swap;
                }
            }
        }
    }

    static ArrayList<Integer> collectEven(int[] data) {
        ArrayList<Integer> list = new ArrayList<>();
        for (int v : data) {
            if (v % 2 == 0) {
                list.add(v);
            }
        }
        return list;
    }

    static boolean prime(int x) {
        if (x < 2) {
            return false;
        }
        int factor = 2;
        while (factor * factor <= x) {
            if (x % factor == 0) {
                return false;
            }
            factor++;
        }
        return true;
    }

    public static int safeParse(String line) {
        try {
            return Integer.parseInt(line.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static boolean palindrome(String line) {
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

    public static double computeBmi(double wgt, double hgt) {
        double value = wgt / Math.pow(hgt, 2);
        return Math.round(value * 10) / 10.0;
    }

    static boolean divisibleByTwo(int x) {
        return x % 2 == 0;
    }

    static double pow(double b, int e) {
        double result = 1;
        for (int idx = 0; idx < e; idx++) {
            result *= b;
        }
        return result;
    }

    public static void drawStars(int rows) {
        for (int row = 1; row <= rows; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static char toLetter(int mark) {
        if (mark >= 90) {
            return 'A';
        } else if (mark >= 80) {
            return 'B';
        } else if (mark >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    public static double computeAverage(int[] data) {
        double result = 0;
        for (int v : data) {
            result = result + v;
        }
        return result / data.length;
    }

    public static int totalOf(int[] data) {
        int result = 0;
        for (int idx = 0; idx < data.length; idx++) {
            result += data[idx];
        }
        return result;
    }

    public static long fact(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * fact(x - 1);
    }

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int idx = 0; idx < size; idx++) {
            data[idx] = rand.nextInt(100);
        }
        return data;
    }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static double toFahrenheit(double c) {
        return c * 9 / 5 + 32;
    }

    static int largest(int[] data) {
        int biggest = data[0];
        for (int idx = 1; idx < data.length; idx++) {
            if (data[idx] > biggest) {
                biggest = data[idx];
            }
        }
        return biggest;
    }

    public static String reverse(String line) {
        StringBuilder sb = new StringBuilder();
        for (int idx = line.length() - 1; idx >= 0; idx--) {
            sb.append(line.charAt(idx));
        }
        return sb.toString();
    }

    static int fib(int x) {
        int a = 0;
        int b = 1;
        for (int idx = 0; idx < x; idx++) {
            int next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    public static void main(String[] args) {
        int[] numbers = {6, 8, 6};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        countdown(4);
        System.out.println(vowels("banana"));
        System.out.println(abs(-32));
        System.out.println("Digits: " + digitSum(46867));
        int pos = search(numbers, 9);
        System.out.println("Found at " + pos);
        sort(numbers);
        System.out.println(Arrays.toString(numbers));
        ArrayList<Integer> even = collectEven(numbers);
        System.out.println(even.size() + " even numbers");
        for (int q = 2; q < 23; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        int parsed = safeParse("42");
        System.out.println(parsed);
        System.out.println(palindrome("noon"));
        System.out.println("BMI: " + computeBmi(51.5, 1.55));
        if (divisibleByTwo(11)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println(pow(2, 7));
        drawStars(4);
        System.out.println("Grade: " + toLetter(76));
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        System.out.println("Sum: " + totalOf(numbers));
        System.out.println(fact(6));
        int[] random = randomFill(6);
        System.out.println(random.length);
        System.out.println("GCD: " + greatestDivisor(35, 36));
        System.out.println(toFahrenheit(5.0));
        int top = largest(numbers);
        System.out.println("Max is " + top);
        String rev = reverse("stressed");
        System.out.println(rev);
        System.out.println("Fib: " + fib(8));
    }
}
