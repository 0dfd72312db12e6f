// Exercise
import java.util.Random;
import java.util.Scanner;

public class Library116 {
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

    static int[] randomFill(int size) {
        Random rand = new Random(42);
        int[] nums = new int[size];
        for (int j = 0; j < size; j++) {
            nums[j] = rand.nextInt(100);
        }
        return nums;
    }

    static boolean even(int x) {
        return x % 2 == 0;
    }

    static double power(double base, int exp) {
        double result = 1;
        for (int j = 0; j < exp; j++) {
            result *= base;
        }
        return result;
    }

    public static String reverse(String line) {
        StringBuilder builder = new StringBuilder();
        for (int j = line.length() - 1; j >= 0; j--) {
            builder.append(line.charAt(j));
        }
        return builder.toString();
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        System.out.println(vowels("hello world"));
        int[] random = randomFill(5);
        System.out.println(random.length);
        if (even(24)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println(power(2, 7));
        String rev = reverse("level");
        System.out.println(rev);
        sc.close();
    }
}
