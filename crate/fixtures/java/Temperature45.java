// Homework
import java.util.Scanner;

public class Temperature45
{
    static final int LIMIT = 22;

    public static int sumArray(int[] scores)
    {
        int sum = 0;
        for (int i = 0; i < scores.length; i++)
        {
            sum += scores[i];
        }
        return sum;
    }

    public static boolean isPalindrome(String text)
    {
        int left = 0;
        int right = text.length() - 1;
        while (left < right)
        {
            if (text.charAt(left) != text.charAt(right))
            {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static double convert(double celsius)
    {
        return celsius * 9 / 5 + 32;
    }

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {1, 8, 2, 2};
        for (int i = 0; i < LIMIT; i += 10)
        {
            System.out.println("Step " + i);
        }
        System.out.println("Sum: " + sumArray(numbers));
        System.out.println(isPalindrome("hello"));
        System.out.println(convert(31.0));
        sc.close();
    }
}
