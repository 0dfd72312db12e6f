import java.util.ArrayList;
import java.util.Arrays;
import java.util.Scanner;

public class Shapes129
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

  static int maxValue(int[] values)
  {
    int best = values[0];
    for (int i = 1; i < values.length; i++)
    {
      if (values[i] > best)
      {
        best = values[i];
      }
    }
    return best;
  }

  static void sort(int[] values)
  {
    for (int i = 0; i < values.length - 1; i++)
    {
      for (int m = 0; m < values.length - 1 - i; m++)
      {
        if (values[m] > values[m + 1])
        {
          int temp = values[m];
          values[m] = values[m + 1];
          values[m + 1] = temp;
        }
      }
    }
  }

  static ArrayList<Integer> filterEven(int[] values)
  {
    ArrayList<Integer> items = new ArrayList<>();
    for (int v : values)
    {
      if (v % 2 == 0)
      {
        items.add(v);
      }
    }
    return items;
  }

  public static void main(String[] args)
  {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {7, 1, 4, 1, 2, 7, 7};
    Point p = new Point(0, 6);
    System.out.println(p.distance());
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    sort(numbers);
    System.out.println(Arrays.toString(numbers));
    ArrayList<Integer> even = filterEven(numbers);
    System.out.println(even.size() + " even numbers");
    sc.close();
  }
}
