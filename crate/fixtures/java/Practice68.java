import java.util.Random;
import java.util.Scanner;

/**
 * Practice68 program.
 */
public class Practice68
{
    static final int LIMIT = 45;

    public static double bodyMassIndex(double kg, double meters)
    {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static void pattern(int rows)
    {
        for (int row = 1; row <= rows; row++)
        {
            for (int col = 0; col < row; col++)
            {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static int[] randomFill(int size)
    {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int j = 0; j < size; j++)
        {
            data[j] = rand.nextInt(100);
        }
        return data;
    }

    public static int safeParse(String word)
    {
        try
        {
            return Integer.parseInt(word.trim());
        }
        catch (NumberFormatException e)
        {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static int fib(int num)
    {
        int first = 0;
        int second = 1;
        for (int j = 0; j < num; j++)
        {
            int next = first + second;
            first = second;
            second = next;
        }
        return first;
    }

    public static String backwards(String word)
    {
        StringBuilder sb = new StringBuilder();
        for (int j = word.length() - 1; j >= 0; j--)
        {
            sb.append(word.charAt(j));
        }
        return sb.toString();
    }

    public static int totalOf(int[] data)
    {
        int result = 0;
        for (int j = 0; j < data.length; j++)
        {
            result += data[j];
        }
        return result;
    }

    public static boolean palindrome(String word)
    {
        int left = 0;
        int right = word.length() - 1;
        while (left < right)
        {
            if (word.charAt(left) != word.charAt(right))
            {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static long fact(int num)
    {
        if (num <= 1)
        {
            return 1;
        }
        return num * fact(num - 1);
    }

    public static int abs(int num)
    {
        return num < 0 ? -num : num;
    }

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {7, 8, 8, 3, 9};
        for (int i = 0; i < LIMIT; i += 10)
        {
            System.out.println("Step " + i);
        }
        System.out.println("BMI: " + bodyMassIndex(66.5, 1.65));
        pattern(5);
        int[] random = randomFill(5);
        System.out.println(random.length);
        int parsed = safeParse("42");
        System.out.println(parsed);
        System.out.println("Fib: " + fib(5));
        String rev = backwards("java");
        System.out.println(rev);
        System.out.println("Sum: " + totalOf(numbers));
        System.out.println(palindrome("racecar"));
        System.out.println(fact(12));
        System.out.println(abs(8));
        sc.close();
    }
}
