public class Primes46
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

    public static void pattern(int size)
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

    public static void main(String[] args)
    {
        Point p = new Point(6, 9);
        System.out.println(p.distance());
        pattern(3);
    }
}
