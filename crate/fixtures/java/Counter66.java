import java.util.Scanner;

public class Counter66 {
    static final int LIMIT = 75;

    public static int safeParse(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static double raise(double b, int e) {
        double result = 1;
        for (int k = 0; k < e; k++) {
            result *= b;
        }
        return result;
    }

    public static double average(int[] nums) {
        double acc = 0;
        for (int v : nums) {
            acc = acc + v;
        }
        return acc / nums.length;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {3, 8, 7, 2, 7, 4, 2};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        int parsed = safeParse("abc");
        System.out.println(parsed);
        System.out.println(raise(2, 7));
        double avg = average(numbers);
        System.out.println("Average: " + avg);
        sc.close();
    }
}
