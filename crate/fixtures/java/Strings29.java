import java.util.Scanner;

public class Strings29
{
    static final int LIMIT = 7;

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

    static int gcd(int a, int b)
    {
        while (b != 0)
        {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
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

    public static int sumArray(int[] nums)
    {
        int total = 0;
        for (int i = 0; i < nums.length; i++)
        {
            total += nums[i];
        }
        return total;
    }

    public static int abs(int num)
    {
        return num < 0 ? -num : num;
    }

    public static String backwards(String word)
    {
        StringBuilder builder = new StringBuilder();
        for (int i = word.length() - 1; i >= 0; i--)
        {
            builder.append(word.charAt(i));
        }
        return builder.toString();
    }

    public static double computeAverage(int[] nums)
    {
        double total = 0;
        for (int v : nums)
        {
            total = total + v;
        }
        return total / nums.length;
    }

    static boolean isPrime(int num)
    {
        if (num < 2)
        {
            return false;
        }
        int div = 2;
        while (div * div <= num)
        {
            if (num % div == 0)
            {
                return false;
            }
            div++;
        }
        return true;
    }

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {6, 4, 9};
        for (int i = 0; i < LIMIT; i += 10)
        {
            System.out.println("Step " + i);
        }
        Point p = new Point(3, 3);
        System.out.println(p.distance());
        System.out.println("GCD: " + gcd(14, 11));
        int parsed = safeParse("42");
        System.out.println(parsed);
        System.out.println(palindrome("noon"));
        System.out.println("Sum: " + sumArray(numbers));
        System.out.println(abs(8));
        String rev = backwards("level");
        System.out.println(rev);
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        for (int q = 2; q < 34; q++)
        {
            if (isPrime(q))
            {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        sc.close();
    }
}
