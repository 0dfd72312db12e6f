// Practice problem
import java.util.ArrayList;

public class Matrix147
{
    public static double toFahrenheit(double degrees)
    {
        return degrees * 9 / 5 + 32;
    }

    static ArrayList<Integer> collectEven(int[] values)
    {
        ArrayList<Integer> items = new ArrayList<>();
        for (int v : values)
        {
            if (v % 2 == 0)
            {
                items.add(v);
            }
        }
        return items;
    }

    public static boolean palindrome(String input)
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

    public static double bodyMassIndex(double wgt, double hgt)
    {
        double value = wgt / Math.pow(hgt, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static int parseOrZero(String input)
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

    static void countdown(int remaining)
    {
        do
        {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    public static String reversed(String input)
    {
        StringBuilder out = new StringBuilder();
        for (int idx = input.length() - 1; idx >= 0; idx--)
        {
            out.append(input.charAt(idx));
        }
        return out.toString();
    }

    public static void main(String[] args)
    {
        int[] numbers = {6, 4, 5, 5, 1};
        System.out.println(toFahrenheit(1.0));
        ArrayList<Integer> even = collectEven(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println(palindrome("hello"));
        System.out.println("BMI: " + bodyMassIndex(67.5, 1.56));
        int parsed = parseOrZero("42");
        System.out.println(parsed);
        countdown(4);
        String rev = reversed("java");
        System.out.println(rev);
    }
}
