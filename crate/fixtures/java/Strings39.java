import java.util.ArrayList;
import java.util.Scanner;

/**
 * Strings39 program.
 */
public class Strings39
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

  static ArrayList<Integer> evens(int[] scores)
  {
    ArrayList<Integer> list = new ArrayList<>();
    for (int v : scores)
    {
      if (v % 2 == 0)
      {
        list.add(v);
      }
    }
    return list;
  }

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {8, 3, 7, 1, 7, 2, 1};
    Point p = new Point(4, 9);
    System.out.println(p.distance());
    ArrayList<Integer> even = evens(numbers);
    System.out.println(even.size() + " even numbers");
    sc.close();
  }
}
