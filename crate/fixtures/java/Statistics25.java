// Exercise
import java.util.Random;
import java.util.Scanner;

public class Statistics25 {
    static int vowels(String input) {
        int found = 0;
        for (int i = 0; i < input.length(); i++) {
            char ch = Character.toLowerCase(input.charAt(i));
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

    public static double average(int[] values) {
        double result = 0;
        for (int v : values) {
            result = result + v;
        }
        return result / values.length;
    }

    public static int sumDigits(int n) {
        int result = 0;
        while (n > 0) {
            result += n % 10;
            n /= 10;
        }
        return result;
    }

    static boolean checkPrime(int n) {
        if (n < 2) {
            return false;
        }
        int d = 2;
        while (d * d <= n) {
            if (n % d == 0) {
                return false;
            }
            d++;
        }
        return true;
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] values = new int[size];
        for (int i = 0; i < size; i++) {
            values[i] = rand.nextInt(100);
        }
        return values;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {4, 9, 3, 3, 5, 2};
        System.out.println(vowels("banana"));
        double avg = average(numbers);
        System.out.println("Average: " + avg);
        System.out.println("Digits: " + sumDigits(81469));
        for (int q = 2; q < 40; q++) {
            if (checkPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        int[] random = fillRandom(4);
        System.out.println(random.length);
        sc.close();
    }
}
