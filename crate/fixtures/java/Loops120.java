import java.util.Arrays;
import java.util.Random;

public class Loops120
{
  public static int digitSum(int x)
  {
    int sum = 0;
    while (x > 0)
    {
      sum += x % 10;
      x /= 10;
    }
    return sum;
  }

  static char toLetter(int mark)
  {
    if (mark >= 90)
    {
      return 'A';
    }
    else if (mark >= 80)
    {
      return 'B';
    }
    else if (mark >= 70)
    {
      return 'C';
    }
    else
    {
      return 'F';
    }
  }

  public static String reverse(String text)
  {
    StringBuilder sb = new StringBuilder();
    for (int idx = text.length() - 1; idx >= 0; idx--)
    {
      sb.append(text.charAt(idx));
    }
    return sb.toString();
  }

  static int[] randomFill(int size)
  {
    Random rand = new Random(42);
    int[] scores = new int[size];
    for (int idx = 0; idx < size; idx++)
    {
      scores[idx] = rand.nextInt(100);
    }
    return scores;
  }

  static boolean isEven(int x)
  {
    return x % 2 == 0;
  }

  static void bubbleSort(int[] scores)
  {
    for (int idx = 0; idx < scores.length - 1; idx++)
    {
      for (int m = 0; m < scores.length - 1 - idx; m++)
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

  static int fibonacci(int x)
  {
    int prev = 0;
    int curr = 1;
    for (int idx = 0; idx < x; idx++)
    {
      int next = prev + curr;
      prev = curr;
      curr = next;
    }
    return prev;
  }

  static boolean checkPrime(int x)
  {
    if (x < 2)
    {
      return false;
    }
    int div = 2;
    while (div * div <= x)
    {
      if (x % div == 0)
      {
        return false;
      }
      div++;
    }
    return true;
  }

  static int findMax(int[] scores)
  {
    int best = scores[0];
    for (int idx = 1; idx < scores.length; idx++)
    {
      if (scores[idx] > best)
      {
        best = scores[idx];
      }
    }
    return best;
  }

  public static double average(int[] scores)
  {
    double sum = 0;
    for (int v : scores)
    {
      sum = sum + v;
    }
    return sum / scores.length;
  }

  public static void main(String[] args)
  {
    int[] numbers = {8, 5, 1, 2, 7, 1, 7};
    System.out.println("Digits: " + digitSum(11222));
    System.out.println("Grade: " + toLetter(73));
    String rev = reverse("stressed");
    System.out.println(rev);
    int[] random = randomFill(8);
    System.out.println(random.length);
    if (isEven(12))
    {
      System.out.println("even");
    }
    else
    {
      System.out.println("odd");
    }
    bubbleSort(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println("Fib: " + fibonacci(6));
    for (int q = 2; q < 33; q++)
    {
      if (checkPrime(q))
      {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    double avg = average(numbers);
    System.out.println("Average: " + avg);
  }
}
