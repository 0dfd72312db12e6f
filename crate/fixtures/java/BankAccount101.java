// Lab assignment
import java.util.Random;

public class BankAccount101 {
    static int vowels(String line) {
        int c = 0;
        for (int i = 0; i < line.length(); i++) {
            char ch = Character.toLowerCase(line.charAt(i));
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

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int i = 0; i < size; i++) {
            data[i] = rand.nextInt(100);
        }
        return data;
    }

    static double pow(double x, int n) {
        double result = 1;
        for (int i = 0; i < n; i++) {
            result *= x;
        }
        return result;
    }

    static boolean even(int num) {
        return num % 2 == 0;
    }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
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

    public static double celsiusToF(double degrees) {
        return degrees * 9 / 5 + 32;
    }

    public static int digitSum(int num) {
        int total = 0;
        while (num > 0) {
            total += num % 10;
            num /= 10;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(vowels("hello world"));
        int[] random = fillRandom(5);
        System.out.println(random.length);
        System.out.println(pow(2, 2));
        if (even(14)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println("GCD: " + greatestDivisor(27, 19));
        for (int q = 2; q < 19; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(celsiusToF(32.0));
        System.out.println("Digits: " + digitSum(61712));
    }
}
