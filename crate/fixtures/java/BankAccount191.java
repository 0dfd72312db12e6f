import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class BankAccount191 {
    public static void drawStars(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static int fib(int num) {
        int a = 0;
        int b = 1;
        for (int j = 0; j < num; j++) {
            int next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    public static double toFahrenheit(double c) {
        return c * 9 / 5 + 32;
    }

    static int largest(int[] arr) {
        int best = arr[0];
        for (int j = 1; j < arr.length; j++) {
            if (arr[j] > best) {
                best = arr[j];
            }
        }
        return best;
    }

    public static long fact(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * fact(num - 1);
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

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] arr = new int[size];
        for (int j = 0; j < size; j++) {
            arr[j] = rand.nextInt(100);
        }
        return arr;
    }

    static double pow(double x, int n) {
        double result = 1;
        for (int j = 0; j < n; j++) {
            result *= x;
        }
        return result;
    }

    static int vowels(String word) {
        int found = 0;
        for (int j = 0; j < word.length(); j++) {
            char ch = Character.toLowerCase(word.charAt(j));
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

    public static int digitSum(int num) {
        int acc = 0;
        while (num > 0) {
            acc += num % 10;
            num /= 10;
        }
        return acc;
    }

    public static double computeBmi(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static double average(int[] arr) {
        double acc = 0;
        for (int v : arr) {
            acc = acc + v;
        }
        return acc / arr.length;
    }

    static boolean prime(int num) {
        if (num < 2) {
            return false;
        }
        int d = 2;
        while (d * d <= num) {
            if (num % d == 0) {
                return false;
            }
            d++;
        }
        return true;
    }

    public static int magnitude(int num) {
        return num < 0 ? -num : num;
    }

    public static int totalOf(int[] arr) {
        int acc = 0;
        for (int j = 0; j < arr.length; j++) {
            acc += arr[j];
        }
        return acc;
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

    public static String reversed(String word) {
        StringBuilder out = new StringBuilder();
        for (int j = word.length() - 1; j >= 0; j--) {
            out.append(word.charAt(j));
        }
        return out.toString();
    }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static boolean divisibleByTwo(int num) {
        return num % 2 == 0;
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

    static void launch(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    public static int find(int[] arr, int wanted) {
        for (int j = 0; j < arr.length; j++) {
            if (arr[j] == wanted) {
                return j;
            }
        }
        return -1;
    }

    public static int toNumber(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static void sort(int[] arr) {
        for (int j = 0; j < arr.length - 1; j++) {
            for (int m = 0; m < arr.length - 1 - j; m++) {
                if (arr[m] > arr[m + 1]) {
                    int temp = arr[m];
                    arr[m] = arr[m + 1];
                    arr[m + 1] = temp;
                }
            }
        }
    }

    public static void main(String[] args) {
        int[] numbers = {4, 8, 3, 1, 3};
        drawStars(3);
        System.out.println("Fib: " + fib(13));
        System.out.println(toFahrenheit(21.0));
        int top = largest(numbers);
        System.out.println("Max is " + top);
        System.out.println(fact(9));
        System.out.println("Grade: " + grade(71));
        int[] random = fillRandom(6);
        System.out.println(random.length);
        System.out.println(pow(2, 8));
        System.out.println(vowels("banana"));
        System.out.println("Digits: " + digitSum(88191));
        System.out.println("BMI: " + computeBmi(76.5, 1.84));
        double avg = average(numbers);
        System.out.println("Average: " + avg);
        for (int q = 2; q < 19; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(magnitude(-1));
        System.out.println("Sum: " + totalOf(numbers));
        System.out.println(palindrome("racecar"));
        String rev = reversed("level");
        System.out.println(rev);
        System.out.println("GCD: " + greatestDivisor(27, 52));
        if (divisibleByTwo(10)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        launch(5);
        int pos = find(numbers, 8);
        System.out.println("Found at " + pos);
        int parsed = toNumber(" 7 ");
        System.out.println(parsed);
        sort(numbers);
        System.out.println(Arrays.toString(numbers));
    }
}
