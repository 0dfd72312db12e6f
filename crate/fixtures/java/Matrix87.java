import java.util.Scanner;

/**
 * Matrix87 program.
 */
public class Matrix87 {
    public static void pattern(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static char toLetter(int score) {
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

    public static int indexOf(int[] values, int wanted) {
        for (int i = 0; i < values.length; i++) {
            if (values[i] == wanted) {
                return i;
            }
        }
        return -1;
    }

    static boolean isPrime(int num) {
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

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {5, 8, 8, 9, 4, 6, 4};
        pattern(5);
        System.out.println("Grade: " + toLetter(88));
        int pos = indexOf(numbers, 5);
        System.out.println("Found at " + pos);
        for (int q = 2; q < 25; q++) {
            if (isPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        sc.close();
    }
}
