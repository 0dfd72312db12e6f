import java.util.Scanner;

public class Recursion161 {
    static int fib(int x) {
        int first = 0;
        int second = 1;
        for (int idx = 0; idx < x; idx++) {
            int next = first + second;
            first = second;
            second = next;
        }
        return first;
    }

    public static void pattern(int rows) {
        for (int row = 1; row <= rows; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static char letterGrade(int score) {
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

    public static int sumDigits(int x) {
        int result = 0;
        while (x > 0) {
            result += x % 10;
            x /= 10;
        }
        return result;
    }

    public static int sumArray(int[] scores) {
        int result = 0;
        for (int idx = 0; idx < scores.length; idx++) {
            result += scores[idx];
        }
        return result;
    }

    public static int safeParse(String line) {
        try {
            return Integer.parseInt(line.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static int countVowels(String line) {
        int found = 0;
        for (int idx = 0; idx < line.length(); idx++) {
            char ch = Character.toLowerCase(line.charAt(idx));
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

    public static String reversed(String line) {
        StringBuilder sb = new StringBuilder();
        for (int idx = line.length() - 1; idx >= 0; idx--) {
            sb.append(line.charAt(idx));
        }
        return sb.toString();
    }

    public static long factorial(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * factorial(x - 1);
    }

    static boolean prime(int x) {
        if (x < 2) {
            return false;
        }
        int factor = 2;
        while (factor * factor <= x) {
            if (x % factor == 0) {
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
        int[] numbers = {3, 5, 2};
        System.out.println("Fib: " + fib(11));
        pattern(6);
        System.out.println("Grade: " + letterGrade(59));
        System.out.println("Digits: " + sumDigits(46411));
        System.out.println("Sum: " + sumArray(numbers));
        int parsed = safeParse(" 7 ");
        System.out.println(parsed);
        System.out.println(countVowels("hello world"));
        String rev = reversed("java");
        System.out.println(rev);
        System.out.println(factorial(9));
        for (int q = 2; q < 33; q++) {
            if (prime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        sc.close();
    }
}
