import java.util.Random;
import java.util.Scanner;

public class Homework199
{
    public static void pattern(int size)
    {
        for (int row = 1; row <= size; row++)
        {
            for (int col = 0; col < row; col++)
            {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static int vowels(String word)
    {
        int c = 0;
        for (int k = 0; k < word.length(); k++)
        {
            char ch = Character.toLowerCase(word.charAt(k));
            switch (ch)
            {
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

    static int[] randomFill(int size)
    {
        Random rand = new Random(42);
        int[] nums = new int[size];
        for (int k = 0; k < size; k++)
        {
            nums[k] = rand.nextInt(100);
        }
        return nums;
    }

    public static double celsiusToF(double degrees)
    {
        return degrees * 9 / 5 + 32;
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

    public static String reversed(String word)
    {
        StringBuilder builder = new StringBuilder();
        for (int k = word.length() - 1; k >= 0; k--)
        {
            builder.append(word.charAt(k));
        }
        return builder.toString();
    }

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        pattern(3);
        System.out.println(vowels("banana"));
        int[] random = randomFill(4);
        System.out.println(random.length);
        System.out.println(celsiusToF(4.0));
        int parsed = safeParse("42");
        System.out.println(parsed);
        String rev = reversed("java");
        System.out.println(rev);
        sc.close();
    }
}
