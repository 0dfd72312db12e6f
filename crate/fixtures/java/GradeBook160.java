/**
 * GradeBook160 program.
 */
public class GradeBook160
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

    public static void main(String[] args)
    {
        System.out.println("GCD: " + greatestDivisor(45, 8));
    }
}
