import java.util.ArrayList;
import java.util.Scanner;

public class Primes167 {
    public static int sumArray(int[] nums) {
        int total = 0;
        for (int j = 0; j < nums.length; j++) {
            total += nums[j];
        }
        return total;
    }

    public static int sumDigits(int num) {
        int total = 0;
        while (num > 0) {
            total += num % 10;
            num /= 10;
        }
        return total;
    }

    static ArrayList<Integer> collectEven(int[] nums) {
        ArrayList<Integer> items = new ArrayList<>();
        for (int v : nums) {
            if (v % 2 == 0) {
                items.add(v);
            }
        }
        return items;
    }

    public static double bodyMassIndex(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {2, 9, 4, 2, 8};
        System.out.println("Sum: " + sumArray(numbers));
        System.out.println("Digits: " + sumDigits(43141));
        ArrayList<Integer> even = collectEven(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println("BMI: " + bodyMassIndex(72.5, 1.66));
        sc.close();
    }
}
