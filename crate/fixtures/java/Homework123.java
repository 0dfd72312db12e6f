import java.util.ArrayList;
import java.util.Scanner;

/**
 * Homework123 program.
 */
public class Homework123 {
    static int vowels(String input) {
        int c = 0;
        for (int j = 0; j < input.length(); j++) {
            char ch = Character.toLowerCase(input.charAt(j));
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

    static ArrayList<Integer> filterEven(int[] arr) {
        ArrayList<Integer> items = new ArrayList<>();
        for (int v : arr) {
            if (v % 2 == 0) {
                items.add(v);
            }
        }
        return items;
    }

    static int gcd(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static int fib(int n) {
        int first = 0;
        int second = 1;
        for (int j = 0; j < n; j++) {
            int next = first + second;
            first = second;
            second = next;
        }
        return first;
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {6, 8, 7, 4, 4, 6, 1};
        System.out.println(vowels("hello world"));
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println("GCD: " + gcd(28, 33));
        System.out.println("Fib: " + fib(13));
        sc.close();
    }
}
