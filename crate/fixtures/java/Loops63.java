public class Loops63
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

  public static boolean isPalindrome(String input)
  {
    int left = 0;
    int right = input.length() - 1;
    while (left < right)
    {
      if (input.charAt(left) != input.charAt(right))
      {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static long fact(int x)
  {
    if (x <= 1)
    {
      return 1;
    }
    return x * fact(x - 1);
  }

  static char letterGrade(int mark)
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

  public static void main(String[] args)
  {
    Point p = new Point(8, 5);
    System.out.println(p.distance());
    System.out.println(isPalindrome("noon"));
    System.out.println(fact(3));
    System.out.println("Grade: " + letterGrade(94));
  }
}
