import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

public class BankAccount119
{
  static int maxValue(int[] scores)
  {
    int biggest = scores[0];
    for (int j = 1; j < scores.length; j++)
    {
      if (scores[j] > biggest)
      {
        biggest = scores[j];
      }
    }
    return biggest;
  }

  static ArrayList<Integer> collectEven(int[] scores)
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

  public static double convert(double degrees)
  {
    return degrees * 9 / 5 + 32;
  }

  static int[] randomFill(int size)
  {
    Random rand = new Random(42);
    int[] scores = new int[size];
    for (int j = 0; j < size; j++)
    {
      scores[j] = rand.nextInt(100);
    }
    return scores;
  }

  public static void pattern(int rows)
  {
    for (int row = 1; row <= rows; row++)
    {
      for (int col = 0; col < row; col++)
      {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  public static int digitSum(int num)
  {
    int result = 0;
    while (num > 0)
    {
      result += num % 10;
      num /= 10;
    }
    return result;
  }

  public static double mean(int[] scores)
  {
    double result = 0;
    for (int v : scores)
    {
      result = result + v;
    }
    return result / scores.length;
  }

  public static int totalOf(int[] scores)
  {
    int result = 0;
    for (int j = 0; j < scores.length; j++)
    {
      result += scores[j];
    }
    return result;
  }

  static void sortArray(int[] scores)
  {
    for (int j = 0; j < scores.length - 1; j++)
    {
      for (int m = 0; m < scores.length - 1 - j; m++)
      {
        if (scores[m] > scores[m + 1])
        {
          int tmp = scores[m];
          scores[m] = scores[m + 1];
          scores[m + 1] = tmp;
        }
      }
    }
  }

  public static int abs(int num)
  {
    return num < 0 ? -num : num;
  }

  public static void main(String[] args)
  {
    int[] numbers = {1, 8, 5};
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println(convert(13.0));
    int[] random = randomFill(4);
    System.out.println(random.length);
    pattern(6);
    System.out.println("Digits: " + digitSum(28489));
    double avg = mean(numbers);
    System.out.println("Average: " + avg);
    System.out.println("Sum: " + totalOf(numbers));
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println(abs(35));
  }
}
