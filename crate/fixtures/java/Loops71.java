/**
 * Loops71 program.
 */
public class Loops71
{
  public static String reverse(String word)
  {
    StringBuilder builder = new StringBuilder();
    for (int k = word.length() - 1; k >= 0; k--)
    {
      builder.append(word.charAt(k));
    }
    return builder.toString();
  }

  public static long factorial(int x)
  {
    if (x <= 1)
    {
      return 1;
    }
    return x * factorial(x - 1);
  }

  public static int totalOf(int[] scores)
  {
    int acc = 0;
    for (int k = 0; k < scores.length; k++)
    {
      acc += scores[k];
    }
    return acc;
  }

  static double power(double b, int e)
  {
    double result = 1;
    for (int k = 0; k < e; k++)
    {
      result *= b;
    }
    return result;
  }

  public static int find(int[] scores, int target)
  {
    for (int k = 0; k < scores.length; k++)
    {
      if (scores[k] == target)
      {
        return k;
      }
    }
    return -1;
  }

  public static int toNumber(String word)
  {
    try
    {
      return Integer.parseInt(word.trim());
    }
    catch (NumberFormatException e)
    {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static void main(String[] args)
  {
    int[] numbers = {6, 8, 7, 6, 5, 1, 2};
    String rev = reverse("java");
    System.out.println(rev);
    System.out.println(factorial(6));
    System.out.println("Sum: " + totalOf(numbers));
    System.out.println(power(2, 2));
    int pos = find(numbers, 7);
    System.out.println("Found at " + pos);
    int parsed = toNumber(" 7 ");
    System.out.println(parsed);
  }
}
