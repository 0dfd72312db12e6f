import java.util.Arrays;

public class BankAccount60
{
  public static String reverse(String text)
  {
    StringBuilder builder = new StringBuilder();
    for (int i = text.length() - 1; i >= 0; i--)
    {
      builder.append(text.charAt(i));
    }
    return builder.toString();
  }

  static void sort(int[] data)
  {
    for (int i = 0; i < data.length - 1; i++)
    {
      for (int m = 0; m < data.length - 1 - i; m++)
      {
        if (data[m] > data[m + 1])
        {
          int tmp = data[m];
          data[m] = data[m + 1];
          data[m + 1] = tmp;
        }
      }
    }
  }

  static char toLetter(int score)
  {
    if (score >= 90)
    {
      return 'A';
    }
    else if (score >= 80)
    {
      return 'B';
    }
    else if (score >= 70)
    {
      return 'C';
    }
    else
    {
      return 'F';
    }
  }

  public static void main(String[] args)
  {
    int[] numbers = {4, 8, 5, 8, 5};
    String rev = reverse("java");
    System.out.println(rev);
    sort(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println("Grade: " + toLetter(72));
  }
}
