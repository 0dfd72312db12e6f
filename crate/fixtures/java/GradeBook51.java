import java.util.Scanner;

/**
 * GradeBook51 program.
 */
public class GradeBook51
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

  public static int search(int[] scores, int key)
  {
    for (int j = 0; j < scores.length; j++)
    {
      if (scores[j] == key)
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
    int[] numbers = {9, 1, 9};
    Point p = new Point(1, 4);
    System.out.println(p.distance());
    System.out.println("GCD: " + gcd(12, 59));
    int pos = search(numbers, 5);
    System.out.println("Found at " + pos);
    sc.close();
  }
}
