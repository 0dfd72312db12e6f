import java.util.ArrayList;
import java.util.Scanner;

/**
 * Recursion36 program.
 */
public class Recursion36
{
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

    static void countdown(int left)
    {
        do
        {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
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

    public static double computeAverage(int[] values)
    {
        double acc = 0;
        for (int v : values)
        {
            acc = acc + v;
        }
        return acc / values.length;
    }

    public static String backwards(String word)
    {
        StringBuilder builder = new StringBuilder();
        for (int j = word.length() - 1; j >= 0; j--)
        {
            builder.append(word.charAt(j));
        }
        return builder.toString();
    }

    static int maxValue(int[] values)
    {
        int max = values[0];
        for (int j = 1; j < values.length; j++)
        {
            if (values[j] > max)
            {
                max = values[j];
            }
        }
        return max;
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

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {2, 4, 3, 7, 4, 6};
        Point p = new Point(8, 8);
        System.out.println(p.distance());
        countdown(5);
        ArrayList<Integer> even = collectEven(numbers);
        System.out.println(even.size() + " even numbers");
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        String rev = backwards("java");
        System.out.println(rev);
        int top = maxValue(numbers);
        System.out.println("Max is " + top);
        System.out.println("GCD: " + gcd(63, 38));
        sc.close();
    }
}
