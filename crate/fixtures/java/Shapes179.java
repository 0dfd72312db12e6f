import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;
import java.util.Scanner;

public class Shapes179 {
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

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static int vowels(String line) {
        int count = 0;
        for (int i = 0; i < line.length(); i++) {
            char ch = Character.toLowerCase(line.charAt(i));
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

    static ArrayList<Integer> filterEven(int[] data) {
        ArrayList<Integer> list = new ArrayList<>();
        for (int v : data) {
            if (v % 2 == 0) {
                list.add(v);
            }
        }
        return list;
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int i = 0; i < size; i++) {
            data[i] = rand.nextInt(100);
        }
        return data;
    }

    public static double convert(double degrees) {
        return degrees * 9 / 5 + 32;
    }

    static void bubbleSort(int[] data) {
        for (int i = 0; i < data.length - 1; i++) {
            for (int m = 0; m < data.length - 1 - i; m++) {
                if (data[m] > data[m + 1]) {
                    int temp = data[m];
                    data[m] = data[m + 1];
                    data[m + 1] = temp;
                }
            }
        }
    }

    static void countDown(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    static int largest(int[] data) {
        int best = data[0];
        for (int i = 1; i < data.length; i++) {
            if (data[i] > best) {
                best = data[i];
            }
        }
        return best;
    }

    public static int digitSum(int num) {
        int acc = 0;
        while (num > 0) {
            acc += num % 10;
            num /= 10;
        }
        return acc;
    }

    static double pow(double base, int exp) {
        double result = 1;
        for (int i = 0; i < exp; i++) {
            result *= base;
        }
        return result;
    }

    static boolean checkPrime(int num) {
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

    public static long factorial(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * factorial(num - 1);
    }

    static int fib(int num) {
        int prev = 0;
        int curr = 1;
        for (int i = 0; i < num; i++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    public static int totalOf(int[] data) {
        int acc = 0;
        for (int i = 0; i < data.length; i++) {
            acc += data[i];
        }
        return acc;
    }

    static boolean even(int num) {
        return num % 2 == 0;
    }

    public static double computeBmi(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static int magnitude(int num) {
        return num < 0 ? -num : num;
    }

    public static int toNumber(String line) {
        try {
            return Integer.parseInt(line.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static int indexOf(int[] data, int key) {
        for (int i = 0; i < data.length; i++) {
            if (data[i] == key) {
                return i;
            }
        }
        return -1;
    }

    public static String reversed(String line) {
        StringBuilder sb = new StringBuilder();
        for (int i = line.length() - 1; i >= 0; i--) {
            sb.append(line.charAt(i));
        }
        return sb.toString();
    }

    public static double mean(int[] data) {
        double acc = 0;
        for (int v : data) {
            acc = acc + v;
        }
        return acc / data.length;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {2, 8, 6, 7, 1, 7};
        drawStars(3);
        System.out.println("Grade: " + toLetter(61));
        System.out.println("GCD: " + greatestDivisor(65, 35));
        System.out.println(vowels("hello world"));
        System.out.println(palindrome("hello"));
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        int[] random = fillRandom(4);
        System.out.println(random.length);
        System.out.println(convert(20.0));
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
        countDown(4);
        int top = largest(numbers);
        System.out.println("Max is " + top);
        System.out.println("Digits: " + digitSum(93768));
        System.out.println(pow(2, 5));
        for (int q = 2; q < 12; q++) {
            if (checkPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(factorial(6));
        System.out.println("Fib: " + fib(7));
        System.out.println("Sum: " + totalOf(numbers));
        if (even(22)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println("BMI: " + computeBmi(61.5, 1.85));
        System.out.println(magnitude(-3));
        int parsed = toNumber("42");
        System.out.println(parsed);
        int pos = indexOf(numbers, 6);
        System.out.println("Found at " + pos);
        String rev = reversed("java");
        System.out.println(rev);
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        sc.close();
    }
}
