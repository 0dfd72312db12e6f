// Lab assignment
import java.util.Random;

public class Matrix100 {
    public static int sumDigits(int x) {
        int acc = 0;
        while (x > 0) {
            acc += x % 10;
            x /= 10;
        }
        return acc;
    }

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int i = 0; i < size; i++) {
            data[i] = rand.nextInt(100);
        }
        return data;
    }

    public static double computeBmi(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    static int gcd(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static boolean checkPrime(int x) {
        if (x < 2) {
            return false;
        }
        int div = 2;
        while (div * div <= x) {
            if (x % div == 0) {
                return false;
            }
            div++;
        }
        return true;
    }

    public static double celsiusToF(double c) {
        return c * 9 / 5 + 32;
    }

    public static double average(int[] data) {
        double acc = 0;
        for (int v : data) {
            acc = acc + v;
        }
        return acc / data.length;
    }

    public static void main(String[] args) {
        int[] numbers = {6, 1, 2};
        System.out.println("Digits: " + sumDigits(79522));
        int[] random = randomFill(5);
        System.out.println(random.length);
        System.out.println("BMI: " + computeBmi(59.5, 1.59));
        System.out.println("GCD: " + gcd(34, 10));
        for (int q = 2; q < 11; q++) {
            if (checkPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(celsiusToF(12.0));
        double avg = average(numbers);
        System.out.println("Average: " + avg);
    }
}
