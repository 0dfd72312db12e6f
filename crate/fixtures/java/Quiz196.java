import java.util.ArrayList;
import java.util.Arrays;
import java.util.Random;

/**
 * Quiz196 program.
 */
public class Quiz196
{
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

  public static double mean(int[] scores)
  {
    double sum = 0;
    for (int v : scores)
    {
      sum = sum + v;
    }
    return sum / scores.length;
  }

  public static int sumDigits(int num)
  {
    int sum = 0;
    while (num > 0)
    {
      sum += num % 10;
      num /= 10;
    }
    return sum;
  }

  static int fib(int num)
  {
    int a = 0;
    int b = 1;
    for (int j = 0; j < num; j++)
    {
      int next = a + b;
      a = b;
      b = next;
    }
    return a;
  }

  public static boolean palindrome(String word)
  {
    int left = 0;
    int right = word.length() - 1;
    while (left < right)
    {
      if (word.charAt(left) != word.charAt(right))
      {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static long fact(int num)
  {
    if (num <= 1)
    {
      return 1;
    }
    return num * fact(num - 1);
  }

  static void countdown(int n)
  {
    do
    {
      System.out.println(n);
      n--;
      } while (n > 0);
      System.out.println("Go!");
    }

  static void sort(int[] scores)
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

  static ArrayList<Integer> collectEven(int[] scores)
  {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : scores)
    {
      if (v % 2 == 0)
      {
        result.add(v);
      }
    }
    return result;
  }

  static double power(double b, int e)
  {
    double result = 1;
    for (int j = 0; j < e; j++)
    {
      result *= b;
    }
    return result;
  }

  public static void main(String[] args)
  {
    int[] numbers = {1, 9, 4, 9};
    int[] random = randomFill(5);
    System.out.println(random.length);
    double avg = mean(numbers);
    System.out.println("Average: " + avg);
    System.out.println("Digits: " + sumDigits(63905));
    System.out.println("Fib: " + fib(14));
    System.out.println(palindrome("racecar"));
    System.out.println(fact(11));
    countdown(5);
    sort(numbers);
    System.out.println(Arrays.toString(numbers));
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println(power(2, 10));
  }
}
