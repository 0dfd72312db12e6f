// Lab assignment
import java.util.Arrays;

public class Lab190
{
    static int greatestDivisor(int a, int b)
    {
        while (b != 0)
        {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static int vowels(String text)
    {
        int c = 0;
        for (int k = 0; k < text.length(); k++)
        {
            char ch = Character.toLowerCase(text.charAt(k));
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

    static void bubbleSort(int[] arr)
    {
        for (int k = 0; k < arr.length - 1; k++)
        {
            for (int m = 0; m < arr.length - 1 - k; m++)
            {
                if (arr[m] > arr[m + 1])
                {
                    int swap = arr[m];
                    arr[m] = arr[m + 1];
                    arr[m + 1] = swap;
                }
            }
        }
    }

    public static int parseOrZero(String text)
    {
        try
        {
            return Integer.parseInt(text.trim());
        }
        catch (NumberFormatException e)
        {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    public static double celsiusToF(double c)
    {
        return c * 9 / 5 + 32;
    }

    public static void drawStars(int height)
    {
        for (int row = 1; row <= height; row++)
        {
            for (int col = 0; col < row; col++)
            {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static double raise(double x, int n)
    {
        double result = 1;
        for (int k = 0; k < n; k++)
        {
            result *= x;
        }
        return result;
    }

    public static int abs(int n)
    {
        return n < 0 ? -n : n;
    }

    public static void main(String[] args)
    {
        int[] numbers = {1, 7, 1, 9, 1};
        System.out.println("GCD: " + greatestDivisor(23, 24));
        System.out.println(vowels("programming"));
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
        int parsed = parseOrZero(" 7 ");
        System.out.println(parsed);
        System.out.println(celsiusToF(29.0));
        drawStars(6);
        System.out.println(raise(2, 10));
        System.out.println(abs(-28));
    }
}
