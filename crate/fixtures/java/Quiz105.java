import java.util.ArrayList;
import java.util.Scanner;

public class Quiz105 {
    static final int LIMIT = 73;

    public static double computeAverage(int[] scores) {
        double result = 0;
        for (int v : scores) {
            result = result + v;
        }
        return result / scores.length;
    }

    public static double convert(double c) {
        return c * 9 / 5 + 32;
    }

    static int fibonacci(int x) {
        int first = 0;
        int second = 1;
        for (int i = 0; i < x; i++) {
            int next = first + second;
            first = second;
            second = next;
        }
        return first;
    }

    static boolean divisibleByTwo(int x) {
        return x % 2 == 0;
    }

    public static int sumDigits(int x) {
        int result = 0;
        while (x > 0) {
            result += x % 10;
            x /= 10;
        }
        return result;
    }

    static ArrayList<Integer> evens(int[] scores) {
        ArrayList<Integer> list = new ArrayList<>();
        for (int v : scores) {
            if (v % 2 == 0) {
                list.add(v);
            }
        }
        return list;
    }

    public static String backwards(String word) {
        StringBuilder sb = new StringBuilder();
        for (int i = word.length() - 1; i >= 0; i--) {
            sb.append(word.charAt(i));
        }
        return sb.toString();
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {9, 8, 1};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        System.out.println(convert(40.0));
        System.out.println("Fib: " + fibonacci(6));
        if (divisibleByTwo(12)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println("Digits: " + sumDigits(48178));
        ArrayList<Integer> even = evens(numbers);
        System.out.println(even.size() + " even numbers");
        String rev = backwards("stressed");
        System.out.println(rev);
        sc.close();
    }
}
