import java.util.Scanner;

public class Calculator128
{
    static final int LIMIT = 73;

    static class Point
    {
        int x;
        int y;
        Point(int x, int y)
        {
            this.x = x;
            this.y = y;
        }
        double distance()
        {
            return Math.sqrt(x * x + y * y);
        }
    }

    static boolean prime(int x)
    {
        if (x < 2)
        {
            return false;
        }
        int factor = 2;
        while (factor * factor <= x)
        {
            if (x % factor == 0)
            {
                return false;
            }
            factor++;
        }
        return true;
    }

    static double raise(double x, int n)
    {
        double result = 1;
        for (int idx = 0; idx < n; idx++)
        {
            result *= x;
        }
        return result;
    }

    public static int sumDigits(int x)
    {
        int result = 0;
        while (x > 0)
        {
            result += x % 10;
            x /= 10;
        }
        return result;
    }

    public static double convert(double degrees)
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

    static int maxValue(int[] values)
    {
        int biggest = values[0];
        for (int idx = 1; idx < values.length; idx++)
        {
            if (values[idx] > biggest)
            {
                biggest = values[idx];
            }
        }
        return biggest;
    }

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {2, 2, 1, 2, 4, 5, 8};
        for (int i = 0; i < LIMIT; i += 10)
        {
            System.out.println("Step " + i);
        }
        Point p = new Point(2, 9);
        System.out.println(p.distance());
        for (int q = 2; q < 37; q++)
        {
            if (prime(q))
            {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(raise(2, 9));
        System.out.println("Digits: " + sumDigits(17220));
        System.out.println(convert(21.0));
        int parsed = safeParse("42");
        System.out.println(parsed);
        int top = maxValue(numbers);
        System.out.println("Max is " + top);
        sc.close();
    }
}
