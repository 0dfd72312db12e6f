import java.util.Scanner;

public class Statistics183
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

    static boolean even(int n)
    {
        return n % 2 == 0;
    }

    static void launch(int n)
    {
        do
        {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    static int fib(int n)
    {
        int prev = 0;
        int curr = 1;
        for (int k = 0; k < n; k++)
        {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    public static double bodyMassIndex(double weight, double height)
    {
        double value = weight / Math.pow(height, 2);
        return Math.round(value * 10) / 10.0;
    }

    static boolean isPrime(int n)
    {
        if (n < 2)
        {
            return false;
        }
        int d = 2;
        while (d * d <= n)
        {
            if (n % d == 0)
            {
                return false;
            }
            d++;
        }
        return true;
    }

    public static double average(int[] data)
    {
        double acc = 0;
        for (int v : data)
        {
            acc = acc + v;
        }
        return acc / data.length;
    }

    public static int totalOf(int[] data)
    {
        int acc = 0;
        for (int k = 0; k < data.length; k++)
        {
            acc += data[k];
        }
        return acc;
    }

    public static long factorial(int n)
    {
        if (n <= 1)
        {
            return 1;
        }
        return n * factorial(n - 1);
    }

    public static void main(String[] args)
    {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {9, 9, 9};
        Point p = new Point(5, 9);
        System.out.println(p.distance());
        if (even(13))
        {
            System.out.println("even");
        }
        else
        {
            System.out.println("odd");
        }
        launch(5);
        System.out.println("Fib: " + fib(13));
        System.out.println("BMI: " + bodyMassIndex(52.5, 1.92));
        for (int q = 2; q < 40; q++)
        {
            if (isPrime(q))
            {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        double avg = average(numbers);
        System.out.println("Average: " + avg);
        System.out.println("Sum: " + totalOf(numbers));
        System.out.println(factorial(9));
        sc.close();
    }
}
