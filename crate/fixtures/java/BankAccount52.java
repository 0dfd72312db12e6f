public class BankAccount52
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

    static int fibonacci(int n)
    {
        int prev = 0;
        int curr = 1;
        for (int j = 0; j < n; j++)
        {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    public static void main(String[] args)
    {
        Point p = new Point(8, 5);
        System.out.println(p.distance());
        System.out.println("Fib: " + fibonacci(11));
    }
}
