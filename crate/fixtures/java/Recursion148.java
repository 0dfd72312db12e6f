// Lab assignment
import java.util.Scanner;

/**
 * Recursion148 program.
 */
public class Recursion148
{
    public static int magnitude(int x)
    {
        return x < 0 ? -x : x;
    }

    public static double toFahrenheit(double degrees)
    {
        return degrees * 9 / 5 + 32;
    }

    static void countDown(int left)
    {
        do
        {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    public static int find(int[] arr, int target)
    {
        for (int j = 0; j < arr.length; j++)
        {
            if (arr[j] == target)
            {
                return j;
            }
        }
        return -1;
    }

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {6, 6, 5, 8};
        System.out.println(magnitude(23));
        System.out.println(toFahrenheit(-10.0));
        countDown(3);
        int pos = find(numbers, 6);
        System.out.println("Found at " + pos);
        sc.close();
    }
}
