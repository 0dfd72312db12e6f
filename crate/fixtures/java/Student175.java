import java.util.ArrayList;
import java.util.Arrays;

public class Student175
{
    static ArrayList<Integer> filterEven(int[] values)
    {
        ArrayList<Integer> result = new ArrayList<>();
        for (int v : values)
        {
            if (v % 2 == 0)
            {
                result.add(v);
            }
        }
        return result;
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

    public static double convert(double c)
    {
        return c * 9 / 5 + 32;
    }

    public static void printTriangle(int size)
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

    public static int addAll(int[] values)
    {
        int sum = 0;
        for (int idx = 0; idx < values.length; idx++)
        {
            sum += values[idx];
        }
        return sum;
    }

    static void bubbleSort(int[] values)
    {
        for (int idx = 0; idx < values.length - 1; idx++)
        {
            for (int m = 0; m < values.length - 1 - idx; m++)
            {
                if (values[m] > values[m + 1])
                {
                    int tmp = values[m];
                    values[m] = values[m + 1];
                    values[m + 1] = tmp;
                }
            }
        }
    }

    public static void main(String[] args)
    {
        int[] numbers = {9, 4, 6};
        ArrayList<Integer> even = filterEven(numbers);
        System.out.println(even.size() + " even numbers");
        System.out.println("GCD: " + gcd(75, 26));
        System.out.println(convert(0.0));
        printTriangle(4);
        System.out.println("Sum: " + addAll(numbers));
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
    }
}
