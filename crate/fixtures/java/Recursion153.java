import java.util.Scanner;

public class Recursion153 {
    public static int find(int[] nums, int target) {
        for (int k = 0; k < nums.length; k++) {
            if (nums[k] == target) {
                return k;
            }
        }
        return -1;
    }

    public static long fact(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * fact(num - 1);
    }

    public static int absolute(int num) {
        return num < 0 ? -num : num;
    }

    static boolean even(int num) {
        return num % 2 == 0;
    }

    public static int toNumber(String word) {
        try {
            return Integer.parseInt(word.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {7, 3, 2};
        int pos = find(numbers, 3);
        System.out.println("Found at " + pos);
        System.out.println(fact(7));
        System.out.println(absolute(42));
        if (even(14)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        int parsed = toNumber("abc");
        System.out.println(parsed);
        sc.close();
    }
}
