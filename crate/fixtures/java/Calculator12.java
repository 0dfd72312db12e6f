// Exercise
import java.util.ArrayList;
import java.util.Random;

/**
 * Calculator12 program.
 */
public class Calculator12
{
    static final int LIMIT = 35;

    static void launch(int remaining)
    {
        do
        {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    public static int safeParse(String input)
    {
        try
        {
            return Integer.parseInt(input.trim());
        }
        catch (NumberFormatException e)
        {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static double mean(int[] data)
    {
        double result = 0;
        for (int v : data)
        {
            result = result + v;
        }
        return result / data.length;
    }

    static boolean divisibleByTwo(int n)
    {
        return n % 2 == 0;
    }

    public static String reverse(String input)
    {
        StringBuilder out = new StringBuilder();
        for (int k = input.length() - 1; k >= 0; k--)
        {
            out.append(input.charAt(k));
        }
        return out.toString();
    }

    static ArrayList<Integer> evens(int[] data)
    {
        ArrayList<Integer> list = new ArrayList<>();
        for (int v : data)
        {
            if (v % 2 == 0)
            {
                list.add(v);
            }
        }
        return list;
    }

    public static int sumArray(int[] data)
    {
        int result = 0;
        for (int k = 0; k < data.length; k++)
        {
            result += data[k];
        }
        return result;
    }

    public static boolean isPalindrome(String input)
    {
        int left = 0;
        int right = input.length() - 1;
        while (left < right)
        {
            if (input.charAt(left) != input.charAt(right))
            {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    static char toLetter(int points)
    {
        if (points >= 90)
        {
            return 'A';
        }
        else if (points >= 80)
        {
            return 'B';
        }
        else if (points >= 70)
        {
            return 'C';
        }
        else
        {
            return 'F';
        }
    }

    static int[] randomFill(int size)
    {
        Random rand = new Random(42);
        int[] data = new int[size];
        for (int k = 0; k < size; k++)
        {
            data[k] = rand.nextInt(100);
        }
        return data;
    }

    public static void main(String[] args)
    {
        int[] numbers = {1, 9, 1};
        for (int i = 0; i < LIMIT; i += 10)
        {
            System.out.println("Step " + i);
        }
        launch(4);
        int parsed = safeParse(" 7 ");
        System.out.println(parsed);
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        if (divisibleByTwo(10))
        {
            System.out.println("even");
        }
        else
        {
            System.out.println("odd");
        }
        String rev = reverse("level");
        System.out.println(rev);
        ArrayList<Integer> even = evens(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println("Sum: " + sumArray(numbers));
        System.out.println(isPalindrome("noon"));
        System.out.println("Grade: " + toLetter(84));
        int[] random = randomFill(3);
        System.out.println(random.length);
    }
}
